#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "blockset/blocking.hpp" // isqrt_ll
#include "blockset/inequality_audit.hpp"

using namespace blockset;

namespace {
const ClaimResult* find_claim(const InequalityAuditReport& r,
                              const std::string& name) {
    for (const auto& c : r.claims)
        if (c.claim == name) return &c;
    return nullptr;
}
} // namespace

TEST_CASE("integer square root") {
    CHECK(isqrt_ll(0) == 0);
    CHECK(isqrt_ll(1) == 1);
    CHECK(isqrt_ll(24) == 4);
    CHECK(isqrt_ll(25) == 5);
    CHECK(isqrt_ll(26) == 5);
    CHECK(isqrt_ll(999999) == 999);
    CHECK(isqrt_ll(1000000) == 1000);
}

TEST_CASE("spot values of the two deficit inequalities") {
    // q = 9: 9*3 - 18 - 3 - 3 = 3 > 0
    CHECK(9 * isqrt_ll(9) - 2 * 9 - isqrt_ll(9) - 3 == 3);
    // q = 8 evaluates negative but sits outside the stated range
    CHECK(8 * isqrt_ll(8) - 2 * 8 - isqrt_ll(8) - 3 == -5);
    auto rep = inequality_audit(8, 8);
    auto* c = find_claim(rep, "cover-deficit-int");
    REQUIRE(c != nullptr);
    CHECK(c->evaluated == 0); // out of range, reported as such
    CHECK(c->violations.empty());
}

TEST_CASE("epsilon polynomial spot value") {
    // e = 1, s = 2: 8 - 4 - 0 - 2 = 2 > 0
    long long s = 2, e = 1;
    CHECK(e * s * s * s + (e * e - 2) * s * s - 2 * (e - 1) * s - 2 == 2);
    auto rep = inequality_audit(4, 8);
    auto* c = find_claim(rep, "epsilon-positivity");
    REQUIRE(c != nullptr);
    CHECK(c->evaluated == 5);
    CHECK(c->violations.empty());
}

TEST_CASE("zero violations across the full desk-scale sweep") {
    auto rep = inequality_audit(2, 10000);
    CHECK(rep.pass());
    for (const auto& c : rep.claims) {
        CAPTURE(c.claim);
        CHECK(c.violations.empty());
    }
}

TEST_CASE("the q=25 congruence replay runs exactly once") {
    auto rep = inequality_audit(2, 10000);
    auto* c = find_claim(rep, "mod5-contradiction");
    REQUIRE(c != nullptr);
    CHECK(c->evaluated == 1);
    CHECK(c->violations.empty());
    auto* k = find_claim(rep, "seven-knot-replay");
    REQUIRE(k != nullptr);
    CHECK(k->evaluated == 1);
}

TEST_CASE("cubic evaluation matches an independent expansion at i = 4") {
    for (long long q : {25, 27, 49, 100, 9999}) {
        long long s = isqrt_ll(q);
        for (long long d = 0; d <= 5; ++d) {
            long long direct = contradiction_cubic(q, 4, d);
            long long expanded = q * q - q * s * s + q * s - 3 * q - 4 * s +
                                 6 - d * (s + 1);
            CHECK(direct == expanded);
        }
    }
}

TEST_CASE("cubic evaluation matches an independent expansion at i = s") {
    for (long long q : {25, 26, 36, 50, 121, 5000}) {
        long long s = isqrt_ll(q);
        for (long long d = 0; d <= 5; ++d) {
            long long direct = contradiction_cubic(q, s, d);
            long long expanded = q * q - q * s * s + q * s - 3 * q -
                                 2 * s * s + 8 * s - 10 - d * (s + 1);
            CHECK(direct == expanded);
        }
    }
}

TEST_CASE("at q = 25 the sqrt-endpoint case is tight exactly at d = 5") {
    long long s = isqrt_ll(25);
    CHECK(contradiction_cubic(25, s, 5) == 0);
    for (long long d = 0; d <= 4; ++d)
        CHECK(contradiction_cubic(25, s, d) > 0);
    CHECK(contradiction_cubic(26, isqrt_ll(26), 5) > 0);
}

TEST_CASE("endpoint minimum verified directly at a few q") {
    for (long long q : {25, 36, 100, 9409}) {
        long long s = isqrt_ll(q);
        long long end = std::min(contradiction_cubic(q, 4, 5),
                                 contradiction_cubic(q, s, 5));
        for (long long i = 4; i <= s; ++i)
            CHECK(contradiction_cubic(q, i, 5) >= end);
    }
}

TEST_CASE("claims clip to the requested window") {
    auto rep = inequality_audit(2, 20);
    auto* c = find_claim(rep, "cubic-at-4");
    REQUIRE(c != nullptr);
    CHECK(c->evaluated == 0); // starts at 25
    auto* d = find_claim(rep, "cover-deficit-int");
    REQUIRE(d != nullptr);
    CHECK(d->range_lo == 9);
    CHECK(d->range_hi == 20);
    CHECK(d->evaluated == 12);
}

TEST_CASE("range errors") {
    CHECK_THROWS_AS(inequality_audit(1, 10), RangeError);
    CHECK_THROWS_AS(inequality_audit(10, 9), RangeError);
    CHECK_THROWS_AS(inequality_audit(2, 2000000), RangeError);
}

TEST_CASE("report bookkeeping") {
    auto rep = inequality_audit(2, 100);
    CHECK(rep.q_lo == 2);
    CHECK(rep.q_hi == 100);
    CHECK(rep.pass());
    CHECK(rep.violation_count() == 0);
    CHECK(rep.claims.size() >= 15);
}
