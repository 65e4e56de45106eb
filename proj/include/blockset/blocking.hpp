#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "blockset/hitting.hpp"
#include "blockset/plane.hpp"

namespace blockset {

// Search outcome with enough data to re-validate the witness and, when
// status is proved-optimal, the exhausted branch-and-bound that proves no
// smaller solution exists.
struct Certificate {
    std::string problem; // "min-blocking" | "min-cover-excluding"
    std::string plane;   // provenance of the searched structure
    int value = 0;
    std::vector<int> witness; // sorted ascending
    std::string status;       // "proved-optimal" | "budget-exhausted"
    long long nodes = 0;
    long long ms = 0;
};

// A line set covering every point of a projective plane except one.
struct CoverConfig {
    IncidenceStructure plane; // projective
    LineSet lines;
    int excluded_point = -1;
};

// Throws InvalidConfig unless P is on no line of L and every other point
// is on at least one.
void validate_cover(const IncidenceStructure& projective, const LineSet& L,
                    int P);

struct BlockingCheck {
    bool blocking = false;
    std::optional<int> unblocked_line; // least index when not blocking
};

BlockingCheck is_blocking(const IncidenceStructure& affine, const PointSet& S);

// {(x,0)} ∪ {(0,y) : y != 0} in AG(2,q) coordinates, size 2q-1.
std::vector<int> axes_indices(int q);
PointSet axes_construction(const IncidenceStructure& affine); // NoCoordinates

// Adds the point blocking the most unblocked lines, ties least index. The
// seed is accepted for interface stability; the rule itself is
// deterministic.
PointSet greedy_blocking(const IncidenceStructure& affine, uint64_t seed = 0);

Certificate min_blocking(const IncidenceStructure& affine,
                         const SearchOptions& opts = {});

Certificate min_cover_excluding(const IncidenceStructure& projective, int P,
                                const SearchOptions& opts = {});

// Completes, dualizes, and maps each blocking point to its dual line;
// the excluded point is the dual of the line at infinity.
CoverConfig dual_transfer(const IncidenceStructure& affine, const PointSet& S);

// Published lower bounds as tripwires: a proved-optimal result below them
// indicates an implementation bug. Both throw BoundViolation.
void check_blocking_bound_guard(const IncidenceStructure& affine,
                                const Certificate& cert);
void check_cover_bound_guard(int order, const Certificate& cert);

long long isqrt_ll(long long n);

} // namespace blockset
