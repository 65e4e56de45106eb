#pragma once

#include <optional>
#include <vector>

#include "blockset/errors.hpp"

namespace blockset {

// Nonnegative integer tuple (a_1..a_b), b >= 2, with derived weight
// k = sum (i-1) a_i, residue m = k mod (b-1) and quotient l = (k-m)/(b-1).
struct KnotTuple {
    int b = 2;
    std::vector<long long> a; // a[i-1] = a_i, size b

    KnotTuple() = default;
    KnotTuple(int b_, std::vector<long long> a_);

    long long weight() const;     // k
    long long residue() const;    // m
    long long quotient() const;   // l
    long long objective() const;  // sum (b-i)(i-1) a_i
    long long sum_squares() const; // sum (i-1)^2 a_i
};

// m(b-1-m) where m = k mod (b-1): the exact minimum of the objective over
// all tuples of weight k.
long long afschatting_bound(int b, long long k);

struct BruteResult {
    long long min_value = 0;
    KnotTuple argmin; // lexicographically least minimizer
};

// Exhaustive enumeration of every tuple with weight k (a_1 does not affect
// weight or objective and is fixed to 0 in the reported argmin).
// Caps: b <= 8, k <= 30.
BruteResult afschatting_brute(int b, long long k);

// One mass-rebalancing move: preserves the weight, strictly increases
// sum (i-1)^2 a_i. Applies the first available of
//   (1) a_j >= 2 for interior j (scanning j ascending):
//       a_j -= 2; a_{2j-1} += 1 if 2j <= b, else a_{2j-b} += 1, a_b += 1
//   (2) a_j, a_j' >= 1 for interior j < j' (lex scan):
//       both -= 1; a_{j+j'-1} += 1 if j+j' <= b, else a_{j+j'-b} += 1,
//       a_b += 1
// Returns nullopt when no interior index carries enough mass (fixed point).
std::optional<KnotTuple> rebalance_step(const KnotTuple& t);

// The unique fixed-point shape of weight k: a_b = l, a_{m+1} = 1 (omitted
// when m = 0). Its objective equals afschatting_bound(b, k).
KnotTuple canonical_extremal(int b, long long k);

} // namespace blockset
