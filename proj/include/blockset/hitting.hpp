#pragma once

#include <cstdint>
#include <limits>
#include <vector>

namespace blockset {

struct SearchOptions {
    long long node_budget = std::numeric_limits<long long>::max();
    int threads = 1;           // <=1 serial; 0 = library default
    bool deterministic = true; // forces the serial, fixed-order search
};

// Minimum hitting set: universe {0..universe-1}, every set must contain a
// chosen element. Sets are sorted element lists.
struct HittingInstance {
    int universe = 0;
    std::vector<std::vector<int>> sets;
};

struct HittingResult {
    std::vector<int> witness; // sorted ascending, feasible
    int value = 0;
    bool proved_optimal = false;
    long long nodes = 0;
    long long ms = 0;
};

// Repeatedly picks the element hitting the most unhit sets (ties: least
// element index).
std::vector<int> greedy_hitting(const HittingInstance& inst);

// Size of a greedy family of pairwise-disjoint sets among those not yet
// hit, scanned in index order. Any hitting set of the remaining instance
// needs at least this many fresh elements, so it is a sound lower bound.
int disjoint_packing_bound(const HittingInstance& inst,
                           const std::vector<char>& hit);

// Branch and bound. Branches on the unhit set with fewest remaining
// (non-excluded) elements, ties by least set index, elements tried in
// ascending order; lower bound is |chosen| plus a greedy pairwise-disjoint
// family of unhit sets scanned in index order. The initial incumbent comes
// from greedy_hitting. The returned value is schedule-independent whenever
// the search exhausts within budget.
HittingResult solve_min_hitting(const HittingInstance& inst,
                                const SearchOptions& opts);

} // namespace blockset
