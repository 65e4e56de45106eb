#pragma once

#include <optional>
#include <string>
#include <vector>

#include "blockset/errors.hpp"
#include "blockset/index_set.hpp"

namespace blockset {

enum class PlaneKind { projective, affine };

// A projective or affine plane of order q as mutually consistent
// line->points and point->lines incidence lists. Structures are immutable
// after construction and safe to share across threads.
struct IncidenceStructure {
    PlaneKind kind = PlaneKind::projective;
    int order = 0; // q
    int num_points = 0;
    int num_lines = 0;
    std::vector<std::vector<int>> line_points; // sorted ascending
    std::vector<std::vector<int>> point_lines; // derived from line_points
    std::string provenance;                    // pg|ag|hall|translation|file

    // Rebuilds point_lines from line_points (num_points must be set).
    void derive_point_lines();

    // The unique common line of two distinct points, if any.
    std::optional<int> common_line(int p1, int p2) const;

    // |line_points[l1] ∩ line_points[l2]| by sorted merge.
    int line_intersection_size(int l1, int l2) const;

    bool point_on_line(int point, int line) const;
};

// Expected counts for a plane of the given kind and order.
struct PlaneCounts {
    int points;
    int lines;
    int points_per_line;
    int lines_per_point;
};
PlaneCounts expected_counts(PlaneKind kind, int order);

void check_point_set(const IncidenceStructure& s, const PointSet& set);
void check_line_set(const IncidenceStructure& s, const LineSet& set);

} // namespace blockset
