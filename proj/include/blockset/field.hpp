#pragma once

#include <cstdint>
#include <vector>

#include "blockset/errors.hpp"

namespace blockset {

// GF(p^e) with elements encoded as base-p digit strings of their polynomial
// coefficients, little-endian in degree: element x has coefficients
// (x mod p, (x/p) mod p, ...). The modulus is the lexicographically least
// monic irreducible of degree e over GF(p), coefficients compared from the
// highest degree down, which pins the encoding of every element.
class FiniteField {
public:
    FiniteField() = default; // empty field; only valid after make()

    static FiniteField make(long p, int e);

    long characteristic() const { return p_; }
    int degree() const { return e_; }
    long order() const { return q_; }

    // e+1 coefficients, little-endian in degree; leading coefficient is 1.
    const std::vector<int>& modulus() const { return modulus_; }

    long add(long x, long y) const;
    long sub(long x, long y) const;
    long neg(long x) const;
    long mul(long x, long y) const;
    long inv(long x) const; // throws ZeroInverse on 0
    long pow(long x, long n) const;

    bool is_element(long x) const { return 0 <= x && x < q_; }

private:
    void check_element(long x) const;

    long p_ = 0;
    int e_ = 0;
    long q_ = 0;
    std::vector<int> modulus_;
    std::vector<int32_t> exp_;  // exp_[i] = g^i, i in [0, q-2]
    std::vector<int32_t> log_;  // log_[x] for x != 0
    std::vector<int32_t> inv_;  // inverse table, inv_[0] unused
};

} // namespace blockset
