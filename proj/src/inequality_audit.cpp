#include "blockset/inequality_audit.hpp"

#include <algorithm>
#include <functional>

#include "blockset/blocking.hpp" // isqrt_ll

namespace blockset {

namespace {

constexpr long long kMaxQ = 1000000;
constexpr int kMaxViolations = 10;
constexpr long long kChunk = 4096;

struct Claim {
    const char* name;
    long long lo; // stated hypothesis range
    long long hi;
    bool (*holds)(long long q, long long s);
};

// q s - 2q - s - 3 > 0
bool cover_deficit_int(long long q, long long s) {
    return q * s - 2 * q - s - 3 > 0;
}

// sqrt(q)(q-1) > 3q + 2, squared to stay in integers
bool cover_deficit_real(long long q, long long) {
    return q * (q - 1) * (q - 1) > (3 * q + 2) * (3 * q + 2);
}

// 2q - 1 > q + sqrt(q) + 3 >= q + s + 3
bool size_gap(long long q, long long s) {
    return (q - 4) > 0 && (q - 4) * (q - 4) > q && q - 4 > s;
}

// s + 1 - q(q - s^2) never vanishes
bool zero_contribution_excluded(long long q, long long s) {
    return s + 1 - q * (q - s * s) != 0;
}

// q(q - s^2) never equals 2
bool small_contribution_excluded(long long q, long long s) {
    return q * (q - s * s) != 2;
}

// q(q - s^2) + s - 5 >= 0 with equality exactly at q = 25
bool equality_only_at_25(long long q, long long s) {
    long long v = q * (q - s * s) + s - 5;
    return q == 25 ? v == 0 : v > 0;
}

// 0 < s-1 < 2s-4 < 2(s-1)
bool contribution_ladder(long long, long long s) {
    return 0 < s - 1 && s - 1 < 2 * s - 4 && 2 * s - 4 < 2 * (s - 1);
}

// tuple count along the special line: |L| = q+s+1 = 1 (mod 5) but the
// knot degrees sum to (q-1)+3 = 2 or (q-1)+4 = 3 (mod 5)
bool mod5_contradiction(long long q, long long s) {
    long long size = (q + s + 1) % 5;
    long long with3 = (q - 1 + 3) % 5;
    long long with4 = (q - 1 + 4) % 5;
    return size == 1 && with3 == 2 && with4 == 3 && with3 != size &&
           with4 != size;
}

// q(q - s^2) + 2(s-2) > 0
bool in_family_line_positive(long long q, long long s) {
    return q * (q - s * s) + 2 * (s - 2) > 0;
}

// if s | q+1 then q = s(s+e) - 1 for e in {1,2}; bracketing bound
bool near_square_epsilon(long long q, long long s) {
    if (s * (s + 3) - 1 <= q) return false; // upper bracket
    if ((q + 1) % s != 0) return true;      // divisibility hypothesis absent
    long long e = (q + 1) / s - s;
    return e == 1 || e == 2;
}

// e s^3 + (e^2-2) s^2 - 2(e-1) s - 2 > 0 for e in {1,2}
bool epsilon_positivity(long long, long long s) {
    for (long long e = 1; e <= 2; ++e) {
        long long v = e * s * s * s + (e * e - 2) * s * s - 2 * (e - 1) * s - 2;
        if (v <= 0) return false;
    }
    return true;
}

// removing a pencil of s+2 lines and two more leaves q-2 < q-1 lines
bool pencil_capacity(long long q, long long s) {
    return (q + s + 2) - (s + 2) - 2 == q - 2 && q - 2 < q - 1;
}

bool cubic_at_4(long long q, long long s) {
    return contradiction_cubic(q, 4, 5) > 0 && q * s - 3 * q - 9 * s + 1 > 0;
}

bool cubic_at_sqrt(long long q, long long s) {
    long long reduced = q * s - 3 * q - 2 * s * s + 3 * s - 15;
    long long direct = contradiction_cubic(q, s, 5);
    if (direct != (q * q - q * s * s) + reduced) return false; // cross-check
    return q == 25 ? (reduced == 0 && direct == 0)
                   : (reduced > 0 && direct > 0);
}

// q = 25 endgame: on an in-family line through the 5-knot the degrees
// minus one sum to 27; with only 1- and 6-knots that sum is 0 mod 5, and
// the least 7-knot count satisfying 5a + 6b = 27 is b = 2, forcing at
// least 10 top knots against d <= 5.
bool seven_knot_replay(long long q, long long s) {
    if (q + s + 2 - 5 != 27) return false;
    long long min_b = -1;
    for (long long bb = 0; 6 * bb <= 27; ++bb)
        if ((27 - 6 * bb) % 5 == 0) { min_b = bb; break; }
    return 27 % 5 != 0 && min_b == 2 && min_b * 5 > 5;
}

// q^2 - 4qs + 6s - 15 > 0
bool isolated_knot_positive(long long q, long long s) {
    return q * q - 4 * q * s + 6 * s - 15 > 0;
}

// (q^2 - q s^2) + q(s-1) - 8s - 2 > 0
bool big_knot_final(long long q, long long s) {
    return (q * q - q * s * s) + q * (s - 1) - 8 * s - 2 > 0;
}

// q(s-1) - 8s - 2 > 0; true only from q = 14 on (not 10: the q^2 - q s^2
// slack is needed below that), so the stated range starts at 14
bool big_knot_reduced(long long q, long long s) {
    return q * (s - 1) - 8 * s - 2 > 0;
}

// minimum of the cubic over integers i in [4, s] sits at an endpoint, and
// the values rise then fall across the interval
bool cubic_endpoint_min(long long q, long long s) {
    if (s < 4) return true; // empty or one-point interval
    long long best = std::min(contradiction_cubic(q, 4, 5),
                              contradiction_cubic(q, s, 5));
    bool descending = false;
    long long prev = contradiction_cubic(q, 4, 5);
    for (long long i = 5; i <= s; ++i) {
        long long cur = contradiction_cubic(q, i, 5);
        if (cur < best) return false;
        if (cur > prev && descending) return false; // rose after falling
        if (cur < prev) descending = true;
        prev = cur;
    }
    return true;
}

const Claim kClaims[] = {
    {"cover-deficit-int", 9, kMaxQ, cover_deficit_int},
    {"cover-deficit-real", 12, kMaxQ, cover_deficit_real},
    {"size-gap", 7, kMaxQ, size_gap},
    {"zero-contribution-excluded", 25, kMaxQ, zero_contribution_excluded},
    {"small-contribution-excluded", 3, kMaxQ, small_contribution_excluded},
    {"equality-only-at-25", 25, kMaxQ, equality_only_at_25},
    {"contribution-ladder", 25, kMaxQ, contribution_ladder},
    {"mod5-contradiction", 25, 25, mod5_contradiction},
    {"in-family-line-positive", 5, kMaxQ, in_family_line_positive},
    {"near-square-epsilon", 9, kMaxQ, near_square_epsilon},
    {"epsilon-positivity", 4, kMaxQ, epsilon_positivity},
    {"pencil-capacity", 2, kMaxQ, pencil_capacity},
    {"cubic-at-4", 25, kMaxQ, cubic_at_4},
    {"cubic-at-sqrt", 25, kMaxQ, cubic_at_sqrt},
    {"seven-knot-replay", 25, 25, seven_knot_replay},
    {"isolated-knot-positive", 16, kMaxQ, isolated_knot_positive},
    {"big-knot-final", 10, kMaxQ, big_knot_final},
    {"big-knot-reduced", 14, kMaxQ, big_knot_reduced},
    {"cubic-endpoint-min", 25, kMaxQ, cubic_endpoint_min},
};

InequalityAuditReport audit_impl(long long q_lo, long long q_hi,
                                 bool parallel) {
    if (q_lo < 2 || q_hi < q_lo || q_hi > kMaxQ)
        throw RangeError("audit range must satisfy 2 <= lo <= hi <= 10^6");

    InequalityAuditReport rep;
    rep.q_lo = q_lo;
    rep.q_hi = q_hi;
    const int ncl = int(std::size(kClaims));
    rep.claims.resize(ncl);
    for (int c = 0; c < ncl; ++c) {
        rep.claims[c].claim = kClaims[c].name;
        rep.claims[c].range_lo = std::max(q_lo, kClaims[c].lo);
        rep.claims[c].range_hi = std::min(q_hi, kClaims[c].hi);
    }

    long long nchunks = (q_hi - q_lo) / kChunk + 1;
    // per chunk, per claim: violations found (kept in q order)
    std::vector<std::vector<std::vector<long long>>> found(
        nchunks, std::vector<std::vector<long long>>(ncl));
    std::vector<std::vector<long long>> counts(
        nchunks, std::vector<long long>(ncl, 0));

    auto run_chunk = [&](long long chunk) {
        long long lo = q_lo + chunk * kChunk;
        long long hi = std::min(q_hi, lo + kChunk - 1);
        for (long long q = lo; q <= hi; ++q) {
            long long s = isqrt_ll(q);
            for (int c = 0; c < ncl; ++c) {
                if (q < rep.claims[c].range_lo || q > rep.claims[c].range_hi)
                    continue;
                ++counts[chunk][c];
                if (!kClaims[c].holds(q, s) &&
                    int(found[chunk][c].size()) < kMaxViolations)
                    found[chunk][c].push_back(q);
            }
        }
    };

#ifdef _OPENMP
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long long chunk = 0; chunk < nchunks; ++chunk) run_chunk(chunk);
    } else
#endif
    {
        (void)parallel;
        for (long long chunk = 0; chunk < nchunks; ++chunk) run_chunk(chunk);
    }

    for (long long chunk = 0; chunk < nchunks; ++chunk) {
        for (int c = 0; c < ncl; ++c) {
            rep.claims[c].evaluated += counts[chunk][c];
            for (long long q : found[chunk][c])
                if (int(rep.claims[c].violations.size()) < kMaxViolations)
                    rep.claims[c].violations.push_back(q);
        }
    }
    return rep;
}

} // namespace

long long contradiction_cubic(long long q, long long i, long long d) {
    long long s = isqrt_ll(q);
    return i * i * i - (q + s + 6) * i * i + (q * s + 4 * q + 4 * s + 12) * i -
           d * (s + 1) + q * q - q * s * s - 3 * q * s - 3 * q - 4 * s - 10;
}

bool InequalityAuditReport::pass() const { return violation_count() == 0; }

long long InequalityAuditReport::violation_count() const {
    long long n = 0;
    for (const auto& c : claims) n += (long long)c.violations.size();
    return n;
}

InequalityAuditReport inequality_audit(long long q_lo, long long q_hi) {
    return audit_impl(q_lo, q_hi, true);
}

InequalityAuditReport inequality_audit_serial(long long q_lo, long long q_hi) {
    return audit_impl(q_lo, q_hi, false);
}

} // namespace blockset
