#include "blockset/quasifield.hpp"

namespace blockset {

namespace {
constexpr long kMaxOrder = 4096;
}

Quasifield Quasifield::hall(long q) {
    if (q < 3 || q * q > kMaxOrder)
        throw OrderOutOfRange("hall quasifield requires 3 <= q with q^2 <= " +
                              std::to_string(kMaxOrder));
    // GF(q) exists iff q is a prime power; factor q as p^e.
    long p = q;
    for (long d = 2; d * d <= q; ++d)
        if (q % d == 0) { p = d; break; }
    int e = 0;
    long v = q;
    while (v > 1) {
        if (v % p != 0)
            throw OrderOutOfRange(std::to_string(q) + " is not a prime power");
        v /= p;
        ++e;
    }

    Quasifield qf;
    qf.base_ = FiniteField::make(p, e);
    qf.q_ = q;
    qf.n_ = q * q;
    qf.family_ = "hall";
    const FiniteField& F = qf.base_;

    // Least (r, s) with t^2 - r*t - s irreducible, i.e. without a root.
    long r = -1, s = -1;
    for (long rc = 0; rc < q && r < 0; ++rc) {
        for (long sc = 0; sc < q && r < 0; ++sc) {
            bool has_root = false;
            for (long t = 0; t < q; ++t) {
                long ft = F.sub(F.sub(F.mul(t, t), F.mul(rc, t)), sc);
                if (ft == 0) { has_root = true; break; }
            }
            if (!has_root) { r = rc; s = sc; }
        }
    }
    qf.r_ = r;
    qf.s_ = s;

    auto f_of = [&](long c) {
        return F.sub(F.sub(F.mul(c, c), F.mul(r, c)), s);
    };

    qf.table_.assign(size_t(qf.n_) * qf.n_, 0);
    for (long a = 0; a < q; ++a) {
        for (long b = 0; b < q; ++b) {
            long x = a + q * b;
            for (long c = 0; c < q; ++c) {
                for (long d = 0; d < q; ++d) {
                    long lo, hi;
                    if (d == 0) {
                        lo = F.mul(a, c);
                        hi = F.mul(b, c);
                    } else {
                        // (a + lambda b)(c + lambda d) =
                        //   (ac - b d^{-1} f(c)) + lambda (ad - bc + br)
                        lo = F.sub(F.mul(a, c),
                                   F.mul(F.mul(b, F.inv(d)), f_of(c)));
                        hi = F.add(F.sub(F.mul(a, d), F.mul(b, c)),
                                   F.mul(b, r));
                    }
                    qf.table_[size_t(x) * qf.n_ + (c + q * d)] =
                        uint16_t(lo + q * hi);
                }
            }
        }
    }
    return qf;
}

Quasifield Quasifield::from_field(const FiniteField& f) {
    if (f.degree() % 2 != 0)
        throw OrderOutOfRange(
            "from_field requires a field of square order (even degree)");
    if (f.order() > kMaxOrder)
        throw OrderOutOfRange("field order exceeds quasifield cap");

    Quasifield qf;
    qf.base_ = FiniteField::make(f.characteristic(), f.degree() / 2);
    qf.q_ = qf.base_.order();
    qf.n_ = f.order();
    qf.family_ = "field";
    qf.table_.assign(size_t(qf.n_) * qf.n_, 0);
    for (long x = 0; x < qf.n_; ++x)
        for (long y = 0; y < qf.n_; ++y)
            qf.table_[size_t(x) * qf.n_ + y] = uint16_t(f.mul(x, y));
    return qf;
}

long Quasifield::add(long x, long y) const {
    long a = base_.add(x % q_, y % q_);
    long b = base_.add(x / q_, y / q_);
    return a + q_ * b;
}

std::string Quasifield::check_axioms() const {
    const long n = n_;
    // identities and zero
    for (long x = 0; x < n; ++x) {
        if (mul(1, x) != x || mul(x, 1) != x)
            return "identity law fails at x=" + std::to_string(x);
        if (mul(0, x) != 0 || mul(x, 0) != 0)
            return "zero law fails at x=" + std::to_string(x);
    }
    // right distributivity: (x+y)m = xm + ym
    for (long x = 0; x < n; ++x)
        for (long y = 0; y < n; ++y)
            for (long m = 0; m < n; ++m)
                if (mul(add(x, y), m) != add(mul(x, m), mul(y, m)))
                    return "right distributivity fails at (" +
                           std::to_string(x) + "," + std::to_string(y) + "," +
                           std::to_string(m) + ")";
    // unique solvability of x*m = x*m' + c for m != m'
    std::vector<char> seen(n);
    for (long m = 0; m < n; ++m) {
        for (long mp = 0; mp < n; ++mp) {
            if (m == mp) continue;
            std::fill(seen.begin(), seen.end(), 0);
            for (long x = 0; x < n; ++x) {
                // c = x*m - x*m' in the additive group (componentwise)
                long xm = mul(x, m), xmp = mul(x, mp);
                long ca = base_.sub(xm % q_, xmp % q_);
                long cb = base_.sub(xm / q_, xmp / q_);
                long c = ca + q_ * cb;
                if (seen[c])
                    return "solvability fails: duplicate c=" +
                           std::to_string(c) + " for m=" + std::to_string(m) +
                           ", m'=" + std::to_string(mp);
                seen[c] = 1;
            }
        }
    }
    return {};
}

} // namespace blockset
