#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "blockset/field.hpp"

namespace blockset {

// Right quasifield of order n = q^2 over GF(q). Elements are pairs (a, b)
// encoded a + q*b, so the subfield {a + lambda*0} occupies indices 0..q-1
// with the same encoding as GF(q). Addition is componentwise over GF(q);
// multiplication is an explicit table.
class Quasifield {
public:
    // Hall system over GF(q) with f(t) = t^2 - r*t - s, (r, s) the
    // lexicographically least pair making f irreducible.
    static Quasifield hall(long q);

    // Wraps a field of square order as a quasifield (its multiplication
    // table verbatim). Requires even extension degree.
    static Quasifield from_field(const FiniteField& f);

    long order() const { return n_; }       // n = q^2
    long base_order() const { return q_; }  // q
    long hall_r() const { return r_; }
    long hall_s() const { return s_; }
    const std::string& family() const { return family_; }

    long add(long x, long y) const;
    long mul(long x, long y) const { return table_[size_t(x) * n_ + y]; }

    // Exhaustive check of the quasifield axioms: right distributivity,
    // unique solvability of x*m = x*m' + c for m != m', and the identity
    // and zero laws. Returns an empty string on success, else a
    // description of the first failure.
    std::string check_axioms() const;

private:
    Quasifield() = default;

    long q_ = 0;
    long n_ = 0;
    long r_ = 0;
    long s_ = 0;
    std::string family_;
    FiniteField base_; // GF(q)
    std::vector<uint16_t> table_;
};

} // namespace blockset
