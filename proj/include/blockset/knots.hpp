#pragma once

#include <optional>
#include <span>
#include <string>

#include "blockset/blocking.hpp"
#include "blockset/plane.hpp"

namespace blockset {

// Knot counts for a line set L in a projective plane of order q: x[i] is
// the number of points lying on exactly i lines of L, for i = 0..q+1. When
// an excluded point P is set, P itself is left out of the counts.
struct KnotSpectrum {
    int q = 0;
    long long line_count = 0;        // |L|
    std::optional<int> excluded;     // P
    std::vector<long long> x;        // x_0..x_{q+1}
    int max_knot = 0;                // k = max{i : x_i > 0}, 0 if L empty

    long long total_points() const;  // q^2+q (P set) or q^2+q+1
};

// Throws ExcludedPointCovered when a line of L passes through P.
KnotSpectrum spectrum(const IncidenceStructure& projective, const LineSet& L,
                      std::optional<int> P = std::nullopt);

// The three standard counting identities:
//   sum x_i = points counted, sum i*x_i = |L|(q+1),
//   sum i(i-1)*x_i = |L|(|L|-1).
bool standard_counts_check(const KnotSpectrum& s);

struct BeqValue {
    long long lhs = 0;
    long long rhs = 0;
};

// For a cover spectrum (P set, no uncovered point besides P), evaluates
//   sum_{i>=1} (i-1)(kbar-i) x_i
// against -|L|(|L|-1) + kbar|L|(q+1) - kbar(q^2+q). The two sides agree
// for every integer kbar. Throws NotACover when x_0 > 0.
BeqValue beq_evaluate(const KnotSpectrum& s, long long kbar);

// Knot counts along one line, with caller-controlled exclusions (the
// proofs variously leave out the profiled knot, the uncovered point, or
// both).
struct LineProfile {
    int line = -1;
    bool in_L = false;
    bool delta = false;             // P lies on the line
    std::vector<long long> a;       // a_0..a_{q+1}
    std::vector<int> exclusions;    // profiled points = line minus these
    long long sum_a = 0;            // sum a_j
    long long sum_j_a = 0;          // sum j*a_j
};

LineProfile line_profile(const IncidenceStructure& projective, const LineSet& L,
                         int line, std::optional<int> P,
                         std::span<const int> exclusions);

struct AuditEntry {
    std::string claim;
    bool applicable = false;
    std::optional<bool> holds; // present iff applicable
    std::string witness;
};

struct AuditReport {
    std::vector<AuditEntry> entries;
    bool any_violation() const;
};

// Checks each lemma's hypotheses against a cover configuration and, where
// they apply, its conclusion against the computed spectrum:
//   max-knot-range:   q >= 9, |L| < 2q-1   =>  k < q, |L| >= q+k,
//                                              k > floor(sqrt(q))
//   knot-above-sqrt:  q >= 25, |L| <= q+floor(sqrt(q))+3
//                                          =>  k > floor(sqrt(q))+1
//   top-knot-count:   q >= 25, k = floor(sqrt(q))+2,
//                     |L| = q+floor(sqrt(q))+2
//                                          =>  x_k <= 5
// A reported violation would contradict published results and indicates an
// implementation bug.
AuditReport hypothesis_audit(const CoverConfig& c);
AuditReport hypothesis_audit(const IncidenceStructure& projective,
                             const LineSet& L, int P);

struct CountsRunResult {
    long long arbitrary_checked = 0;
    long long covers_checked = 0;
    long long failures = 0;
    std::string first_failure;
    bool pass() const { return failures == 0; }
};

// Seeded property run over one projective plane: `trials` random line sets
// checked against the three standard countings, and `trials` random cover
// configurations additionally checked for the cross-identity at every
// kbar in [0, q+2] and a violation-free hypothesis audit.
CountsRunResult counts_property_run(const IncidenceStructure& projective,
                                    int trials, uint64_t seed);

} // namespace blockset
