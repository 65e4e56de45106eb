#include "blockset/knot_tuple.hpp"

#include <algorithm>

namespace blockset {

KnotTuple::KnotTuple(int b_, std::vector<long long> a_)
    : b(b_), a(std::move(a_)) {
    if (b < 2) throw RangeError("knot tuple needs b >= 2");
    a.resize(b, 0);
    for (long long v : a)
        if (v < 0) throw RangeError("knot tuple entries must be nonnegative");
}

long long KnotTuple::weight() const {
    long long k = 0;
    for (int i = 1; i <= b; ++i) k += (long long)(i - 1) * a[i - 1];
    return k;
}

long long KnotTuple::residue() const { return weight() % (b - 1); }

long long KnotTuple::quotient() const {
    long long k = weight();
    return (k - k % (b - 1)) / (b - 1);
}

long long KnotTuple::objective() const {
    long long v = 0;
    for (int i = 1; i <= b; ++i)
        v += (long long)(b - i) * (i - 1) * a[i - 1];
    return v;
}

long long KnotTuple::sum_squares() const {
    long long v = 0;
    for (int i = 1; i <= b; ++i)
        v += (long long)(i - 1) * (i - 1) * a[i - 1];
    return v;
}

long long afschatting_bound(int b, long long k) {
    if (b < 2 || k < 0) throw RangeError("need b >= 2 and k >= 0");
    long long m = k % (b - 1);
    return m * (b - 1 - m);
}

BruteResult afschatting_brute(int b, long long k) {
    if (b < 2 || k < 0) throw RangeError("need b >= 2 and k >= 0");
    if (b > 8 || k > 30)
        throw RangeError("brute-force caps are b <= 8, k <= 30");

    BruteResult best;
    bool found = false;
    std::vector<long long> cur(b, 0);

    // Assign a_b, a_{b-1}, ..., a_2; a_1 contributes nothing.
    auto rec = [&](auto&& self, int i, long long remaining) -> void {
        if (i == 1) {
            if (remaining != 0) return;
            KnotTuple t(b, cur);
            long long obj = t.objective();
            if (!found || obj < best.min_value ||
                (obj == best.min_value &&
                 std::lexicographical_compare(cur.begin(), cur.end(),
                                              best.argmin.a.begin(),
                                              best.argmin.a.end()))) {
                best.min_value = obj;
                best.argmin = std::move(t);
                found = true;
            }
            return;
        }
        long long coef = i - 1;
        for (long long ai = 0; ai * coef <= remaining; ++ai) {
            cur[i - 1] = ai;
            self(self, i - 1, remaining - ai * coef);
        }
        cur[i - 1] = 0;
    };
    rec(rec, b, k);
    return best;
}

std::optional<KnotTuple> rebalance_step(const KnotTuple& t) {
    const int b = t.b;
    // doubled-index move
    for (int j = 2; j <= b - 1; ++j) {
        if (t.a[j - 1] >= 2) {
            KnotTuple out = t;
            out.a[j - 1] -= 2;
            if (2 * j <= b) {
                out.a[2 * j - 2] += 1;
            } else {
                out.a[2 * j - b - 1] += 1;
                out.a[b - 1] += 1;
            }
            return out;
        }
    }
    // distinct-pair move
    for (int j = 2; j <= b - 1; ++j) {
        if (t.a[j - 1] < 1) continue;
        for (int jp = j + 1; jp <= b - 1; ++jp) {
            if (t.a[jp - 1] < 1) continue;
            KnotTuple out = t;
            out.a[j - 1] -= 1;
            out.a[jp - 1] -= 1;
            if (j + jp <= b) {
                out.a[j + jp - 2] += 1;
            } else {
                out.a[j + jp - b - 1] += 1;
                out.a[b - 1] += 1;
            }
            return out;
        }
    }
    return std::nullopt;
}

KnotTuple canonical_extremal(int b, long long k) {
    if (b < 2 || k < 0) throw RangeError("need b >= 2 and k >= 0");
    long long m = k % (b - 1);
    long long l = (k - m) / (b - 1);
    std::vector<long long> a(b, 0);
    a[b - 1] = l;
    if (m > 0) a[size_t(m)] += 1; // a_{m+1}
    return KnotTuple(b, std::move(a));
}

} // namespace blockset
