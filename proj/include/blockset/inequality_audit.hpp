#pragma once

#include <string>
#include <vector>

#include "blockset/errors.hpp"

namespace blockset {

struct ClaimResult {
    std::string claim;
    long long range_lo = 0; // evaluated range after clipping to the claim's
    long long range_hi = 0; // stated hypothesis range (hi < lo: nothing ran)
    long long evaluated = 0;
    std::vector<long long> violations; // offending q values, first <= 10
};

struct InequalityAuditReport {
    long long q_lo = 0, q_hi = 0;
    std::vector<ClaimResult> claims;
    bool pass() const;
    long long violation_count() const;
};

// Evaluates, in exact integer arithmetic, every sign/congruence claim used
// by the covering arguments over its stated hypothesis range intersected
// with [q_lo, q_hi] (all integers q, not only prime powers). Includes the
// q = 25 congruence replays and the endpoint-minimum property of the cubic
// in i over [4, floor(sqrt(q))]. The parallel version partitions the q
// range across OpenMP threads and reports identically to the serial one.
InequalityAuditReport inequality_audit(long long q_lo, long long q_hi);
InequalityAuditReport inequality_audit_serial(long long q_lo, long long q_hi);

// The cubic side of the degree-i contradiction with top-knot count d:
//   i^3 - (q+s+6) i^2 + (qs+4q+4s+12) i - d(s+1)
//     + q^2 - q s^2 - 3qs - 3q - 4s - 10,   s = floor(sqrt(q)).
long long contradiction_cubic(long long q, long long i, long long d);

} // namespace blockset
