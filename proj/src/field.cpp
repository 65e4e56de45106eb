#include "blockset/field.hpp"

#include <algorithm>
#include <numeric>

namespace blockset {

namespace {

constexpr long kMaxOrder = 1L << 20;

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Dense polynomials over GF(p), little-endian coefficient vectors.
using Poly = std::vector<int>;

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int deg(const Poly& f) { return int(f.size()) - 1; }

Poly poly_mul(const Poly& f, const Poly& g, long p) {
    if (f.empty() || g.empty()) return {};
    Poly h(f.size() + g.size() - 1, 0);
    for (size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) continue;
        for (size_t j = 0; j < g.size(); ++j)
            h[i + j] = int((h[i + j] + long(f[i]) * g[j]) % p);
    }
    trim(h);
    return h;
}

// Remainder of f by monic g.
Poly poly_mod(Poly f, const Poly& g, long p) {
    trim(f);
    while (deg(f) >= deg(g)) {
        int shift = deg(f) - deg(g);
        long c = f.back();
        for (size_t i = 0; i < g.size(); ++i) {
            long v = f[i + shift] - c * g[i] % p;
            f[i + shift] = int(((v % p) + p) % p);
        }
        trim(f);
    }
    return f;
}

bool divides(const Poly& g, const Poly& f, long p) {
    return poly_mod(f, g, p).empty();
}

// Trial division by every monic polynomial of degree 1..e/2. Candidate
// moduli are small (p^e <= 2^20), so this is cheap and obviously correct.
bool is_irreducible(const Poly& f, long p) {
    int e = deg(f);
    if (e <= 0) return false;
    if (e == 1) return true;
    for (int d = 1; 2 * d <= e; ++d) {
        long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long n = 0; n < count; ++n) {
            Poly g(d + 1, 0);
            long v = n;
            for (int i = 0; i < d; ++i) {
                g[i] = int(v % p);
                v /= p;
            }
            g[d] = 1;
            if (divides(g, f, p)) return false;
        }
    }
    return true;
}

// Scan monic degree-e polynomials in lexicographic order of
// (c_{e-1}, ..., c_0) and return the first irreducible one.
Poly least_irreducible(long p, int e) {
    long count = 1;
    for (int i = 0; i < e; ++i) count *= p;
    for (long n = 0; n < count; ++n) {
        Poly f(e + 1, 0);
        f[e] = 1;
        // n = sum c_j p^j, so ascending n enumerates (c_{e-1}, ..., c_0)
        // in lexicographic order read from the highest degree down
        long v = n;
        for (int j = 0; j < e; ++j) {
            f[j] = int(v % p);
            v /= p;
        }
        if (is_irreducible(f, p)) return f;
    }
    return {}; // unreachable: irreducibles exist for every (p, e)
}

long encode(const Poly& f, long p, int e) {
    long v = 0;
    for (int i = e - 1; i >= 0; --i)
        v = v * p + (i < int(f.size()) ? f[i] : 0);
    return v;
}

Poly decode(long x, long p, int e) {
    Poly f(e, 0);
    for (int i = 0; i < e; ++i) {
        f[i] = int(x % p);
        x /= p;
    }
    trim(f);
    return f;
}

} // namespace

FiniteField FiniteField::make(long p, int e) {
    if (!is_prime(p))
        throw NonPrimeCharacteristic("characteristic " + std::to_string(p) +
                                     " is not prime");
    if (e < 1)
        throw DegreeOutOfRange("degree must be >= 1");
    long q = 1;
    for (int i = 0; i < e; ++i) {
        q *= p;
        if (q > kMaxOrder)
            throw DegreeOutOfRange("field order exceeds 2^20");
    }

    FiniteField f;
    f.p_ = p;
    f.e_ = e;
    f.q_ = q;
    Poly mod = least_irreducible(p, e);
    f.modulus_.assign(e + 1, 0);
    for (size_t i = 0; i < mod.size(); ++i) f.modulus_[i] = mod[i];

    // Multiplication and inversion run off exp/log tables of a fixed
    // generator: the least element (in encoding order) whose multiplicative
    // order is q-1.
    auto raw_mul = [&](long x, long y) {
        Poly h = poly_mul(decode(x, p, e), decode(y, p, e), p);
        return encode(poly_mod(std::move(h), mod, p), p, e);
    };

    std::vector<long> prime_factors;
    {
        long m = q - 1;
        for (long d = 2; d * d <= m; ++d) {
            if (m % d == 0) {
                prime_factors.push_back(d);
                while (m % d == 0) m /= d;
            }
        }
        if (m > 1) prime_factors.push_back(m);
    }
    auto raw_pow = [&](long x, long n) {
        long r = 1;
        while (n) {
            if (n & 1) r = raw_mul(r, x);
            x = raw_mul(x, x);
            n >>= 1;
        }
        return r;
    };
    long g = 0;
    for (long cand = 2; cand < q; ++cand) {
        bool ok = true;
        for (long r : prime_factors)
            if (raw_pow(cand, (q - 1) / r) == 1) { ok = false; break; }
        if (ok) { g = cand; break; }
    }
    if (q == 2) g = 1;

    f.exp_.assign(q - 1, 0);
    f.log_.assign(q, 0);
    long cur = 1;
    for (long i = 0; i < q - 1; ++i) {
        f.exp_[i] = int32_t(cur);
        f.log_[cur] = int32_t(i);
        cur = raw_mul(cur, g);
    }
    f.inv_.assign(q, 0);
    for (long x = 1; x < q; ++x)
        f.inv_[x] = f.exp_[(q - 1 - f.log_[x]) % (q - 1)];
    return f;
}

void FiniteField::check_element(long x) const {
    if (!is_element(x))
        throw DomainError("element " + std::to_string(x) +
                          " out of range for field of order " +
                          std::to_string(q_));
}

long FiniteField::add(long x, long y) const {
    check_element(x);
    check_element(y);
    long r = 0, mult = 1;
    for (int i = 0; i < e_; ++i) {
        long d = (x % p_ + y % p_) % p_;
        r += d * mult;
        mult *= p_;
        x /= p_;
        y /= p_;
    }
    return r;
}

long FiniteField::neg(long x) const {
    check_element(x);
    long r = 0, mult = 1;
    for (int i = 0; i < e_; ++i) {
        long d = (p_ - x % p_) % p_;
        r += d * mult;
        mult *= p_;
        x /= p_;
    }
    return r;
}

long FiniteField::sub(long x, long y) const { return add(x, neg(y)); }

long FiniteField::mul(long x, long y) const {
    check_element(x);
    check_element(y);
    if (x == 0 || y == 0) return 0;
    return exp_[(log_[x] + log_[y]) % (q_ - 1)];
}

long FiniteField::inv(long x) const {
    check_element(x);
    if (x == 0) throw ZeroInverse("0 has no multiplicative inverse");
    return inv_[x];
}

long FiniteField::pow(long x, long n) const {
    check_element(x);
    if (n == 0) return 1;
    if (x == 0) return 0;
    long r = 1;
    while (n) {
        if (n & 1) r = mul(r, x);
        x = mul(x, x);
        n >>= 1;
    }
    return r;
}

} // namespace blockset
