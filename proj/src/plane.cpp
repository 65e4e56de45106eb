#include "blockset/plane.hpp"

#include <algorithm>

namespace blockset {

void IncidenceStructure::derive_point_lines() {
    point_lines.assign(num_points, {});
    for (int l = 0; l < int(line_points.size()); ++l)
        for (int p : line_points[l]) point_lines[p].push_back(l);
}

std::optional<int> IncidenceStructure::common_line(int p1, int p2) const {
    const auto& a = point_lines[p1];
    const auto& b = point_lines[p2];
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (a[i] > b[j]) ++j;
        else return a[i];
    }
    return std::nullopt;
}

int IncidenceStructure::line_intersection_size(int l1, int l2) const {
    const auto& a = line_points[l1];
    const auto& b = line_points[l2];
    size_t i = 0, j = 0;
    int n = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (a[i] > b[j]) ++j;
        else { ++n; ++i; ++j; }
    }
    return n;
}

bool IncidenceStructure::point_on_line(int point, int line) const {
    const auto& pts = line_points[line];
    return std::binary_search(pts.begin(), pts.end(), point);
}

PlaneCounts expected_counts(PlaneKind kind, int q) {
    if (kind == PlaneKind::projective)
        return {q * q + q + 1, q * q + q + 1, q + 1, q + 1};
    return {q * q, q * q + q, q, q + 1};
}

void check_point_set(const IncidenceStructure& s, const PointSet& set) {
    if (set.universe() != s.num_points)
        throw StructureMismatch("point set universe " +
                                std::to_string(set.universe()) +
                                " does not match plane with " +
                                std::to_string(s.num_points) + " points");
}

void check_line_set(const IncidenceStructure& s, const LineSet& set) {
    if (set.universe() != s.num_lines)
        throw StructureMismatch("line set universe " +
                                std::to_string(set.universe()) +
                                " does not match plane with " +
                                std::to_string(s.num_lines) + " lines");
}

} // namespace blockset
