#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "blockset/field.hpp"

#include <vector>

using namespace blockset;

namespace {

// Independent oracle: least monic irreducible quadratic over GF(p) by
// scanning (c1, c0) high-to-low and testing for roots with plain integer
// arithmetic.
std::vector<int> least_irreducible_quadratic(int p) {
    for (int c1 = 0; c1 < p; ++c1) {
        for (int c0 = 0; c0 < p; ++c0) {
            bool has_root = false;
            for (int t = 0; t < p && !has_root; ++t)
                if ((t * t + c1 * t + c0) % p == 0) has_root = true;
            if (!has_root) return {c0, c1, 1}; // little-endian digits
        }
    }
    return {};
}

// Materializes full operation tables once, then checks every axiom over
// every pair/triple with plain lookups; one CHECK per axiom family.
void exhaustive_axiom_suite(const FiniteField& F) {
    const long q = F.order();
    std::vector<int> add(q * q), mul(q * q);
    for (long x = 0; x < q; ++x)
        for (long y = 0; y < q; ++y) {
            add[x * q + y] = int(F.add(x, y));
            mul[x * q + y] = int(F.mul(x, y));
        }

    long failures = 0;
    for (long x = 0; x < q; ++x) {
        if (add[x * q + 0] != x) ++failures;
        if (mul[x * q + 1] != x) ++failures;
        if (add[x * q + F.neg(x)] != 0) ++failures;
        if (x != 0 && mul[x * q + F.inv(x)] != 1) ++failures;
    }
    CHECK(failures == 0); // identities and inverses

    failures = 0;
    for (long x = 0; x < q; ++x)
        for (long y = 0; y < q; ++y) {
            if (add[x * q + y] != add[y * q + x]) ++failures;
            if (mul[x * q + y] != mul[y * q + x]) ++failures;
        }
    CHECK(failures == 0); // commutativity

    failures = 0;
    for (long x = 0; x < q && failures == 0; ++x)
        for (long y = 0; y < q; ++y)
            for (long z = 0; z < q; ++z) {
                if (add[add[x * q + y] * q + z] != add[x * q + add[y * q + z]])
                    ++failures;
                if (mul[mul[x * q + y] * q + z] != mul[x * q + mul[y * q + z]])
                    ++failures;
                if (mul[x * q + add[y * q + z]] !=
                    add[mul[x * q + y] * q + mul[x * q + z]])
                    ++failures;
            }
    CHECK(failures == 0); // associativity and distributivity
}

} // namespace

TEST_CASE("prime field GF(2)") {
    auto F = FiniteField::make(2, 1);
    CHECK(F.order() == 2);
    CHECK(F.add(1, 1) == 0);
    CHECK(F.mul(1, 1) == 1);
}

TEST_CASE("non-prime characteristic is rejected") {
    CHECK_THROWS_AS(FiniteField::make(4, 1), NonPrimeCharacteristic);
    CHECK_THROWS_AS(FiniteField::make(1, 1), NonPrimeCharacteristic);
    CHECK_THROWS_AS(FiniteField::make(9, 1), NonPrimeCharacteristic);
}

TEST_CASE("degree bounds") {
    CHECK_THROWS_AS(FiniteField::make(2, 0), DegreeOutOfRange);
    CHECK_THROWS_AS(FiniteField::make(2, 21), DegreeOutOfRange);
    CHECK_THROWS_AS(FiniteField::make(3, 13), DegreeOutOfRange);
    CHECK_NOTHROW(FiniteField::make(2, 20));
}

TEST_CASE("GF(9) modulus is the lex-least monic irreducible quadratic") {
    auto F = FiniteField::make(3, 2);
    CHECK(F.modulus() == least_irreducible_quadratic(3));
    CHECK(F.modulus() == std::vector<int>{1, 0, 1}); // x^2 + 1
}

TEST_CASE("least irreducible quadratics match the oracle for several p") {
    for (int p : {3, 5, 7, 11, 13}) {
        auto F = FiniteField::make(p, 2);
        CHECK(F.modulus() == least_irreducible_quadratic(p));
    }
}

TEST_CASE("GF(3) arithmetic") {
    auto F = FiniteField::make(3, 1);
    CHECK(F.add(2, 2) == 1);
    CHECK(F.neg(1) == 2);
    CHECK(F.inv(2) == 2);
}

TEST_CASE("GF(9) polynomial arithmetic") {
    auto F = FiniteField::make(3, 2);
    // element 3 encodes the generator polynomial t; t^2 = -1 = 2 mod t^2+1
    CHECK(F.mul(3, 3) == 2);
    CHECK(F.inv(1) == 1);
    CHECK(F.add(3, 3) == 6); // t + t = 2t
}

TEST_CASE("inv(1) = 1 in assorted fields") {
    for (auto [p, e] : {std::pair<long, int>{2, 1}, {2, 4}, {3, 3}, {5, 2},
                        {7, 1}, {13, 1}}) {
        auto F = FiniteField::make(p, e);
        CHECK(F.inv(1) == 1);
    }
}

TEST_CASE("inverse of zero and domain errors") {
    auto F = FiniteField::make(5, 1);
    CHECK_THROWS_AS(F.inv(0), ZeroInverse);
    CHECK_THROWS_AS(F.add(5, 0), DomainError);
    CHECK_THROWS_AS(F.mul(0, -1), DomainError);
}

TEST_CASE("exhaustive field axioms for orders up to 512") {
    for (auto [p, e] : {std::pair<long, int>{2, 1}, {2, 2}, {2, 3}, {2, 4},
                        {2, 5}, {2, 6}, {2, 7}, {2, 8}, {2, 9}, {3, 1},
                        {3, 2}, {3, 3}, {3, 4}, {3, 5}, {5, 1}, {5, 2},
                        {5, 3}, {7, 1}, {7, 2}, {7, 3}, {11, 2}, {13, 2},
                        {17, 2}, {19, 2}, {31, 1}, {127, 1}, {251, 1},
                        {509, 1}}) {
        CAPTURE(p);
        CAPTURE(e);
        exhaustive_axiom_suite(FiniteField::make(p, e));
    }
}

TEST_CASE("construction is deterministic") {
    auto A = FiniteField::make(3, 2);
    auto B = FiniteField::make(3, 2);
    CHECK(A.modulus() == B.modulus());
    for (long x = 0; x < 9; ++x)
        for (long y = 0; y < 9; ++y) {
            CHECK(A.mul(x, y) == B.mul(x, y));
            CHECK(A.add(x, y) == B.add(x, y));
        }
}

TEST_CASE("a larger field sanity check") {
    auto F = FiniteField::make(2, 16);
    CHECK(F.order() == 65536);
    CHECK(F.mul(F.inv(12345), 12345) == 1);
    CHECK(F.pow(7, F.order() - 1) == 1); // multiplicative group order
}
