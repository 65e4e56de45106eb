#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "blockset/spectrum_solve.hpp"

using namespace blockset;

TEST_CASE("q = 25 fails the integrality gate for every parameter choice") {
    // q^2 - q - 2 = 598 is not a multiple of floor(sqrt(25)) = 5
    CHECK((25 * 25 - 25 - 2) % 5 != 0);
    for (long long d = 1; d <= 5; ++d)
        for (long long b = 0; b <= 25; ++b) {
            auto sol = spectrum_solve(25, d, b);
            CHECK_FALSE(sol.feasible);
            CHECK_FALSE(sol.integrality);
            CHECK(sol.first_failure == "integrality");
        }
}

TEST_CASE("q = 27, d = 5, b = 33: integrality holds, big knots overflow") {
    auto sol = spectrum_solve(27, 5, 33);
    CHECK(sol.a == 140); // 2*4 + 33*4
    CHECK(sol.integrality);
    CHECK(sol.xs1 == 29); // 1 - 5 + 33
    CHECK(sol.x1 == 701);
    CHECK(sol.x2 == 21);
    CHECK_FALSE(sol.bigknot_ok); // 5 + 29 = 34 > 28
    CHECK_FALSE(sol.b_ok);       // 33 > 27
    CHECK_FALSE(sol.feasible);
    CHECK(sol.first_failure == "bigknot");
}

TEST_CASE("q = 27, d = 5, b = 0: the integrality chain fails") {
    auto sol = spectrum_solve(27, 5, 0);
    CHECK(sol.a == 8); // but 700/5 = 140 would be needed
    CHECK_FALSE(sol.integrality);
    CHECK(sol.first_failure == "integrality");
}

TEST_CASE("whenever integrality holds the countings balance exactly") {
    long long hits = 0;
    for (long long q = 25; q <= 120; ++q) {
        long long s = (long long)std::sqrt((double)q);
        while (s * s > q) --s;
        while ((s + 1) * (s + 1) <= q) ++s;
        for (long long d = 1; d <= 5; ++d) {
            for (long long b = 0; b <= q; ++b) {
                auto sol = spectrum_solve(q, d, b);
                if (!sol.integrality) continue;
                ++hits;
                long long size = q + s + 2;
                // x_0 = 0, x_{s+2} = d, remaining mass in x1/x2/x_{s+1}
                long long sum = sol.x1 + sol.x2 + sol.xs1 + d;
                long long sum_i = sol.x1 + 2 * sol.x2 + (s + 1) * sol.xs1 +
                                  (s + 2) * d;
                long long sum_ii = 2 * sol.x2 + (s + 1) * s * sol.xs1 +
                                   (s + 2) * (s + 1) * d;
                CHECK(sum == q * q + q);
                CHECK(sum_i == size * (q + 1));
                CHECK(sum_ii == size * (size - 1));
            }
        }
    }
    CHECK(hits > 0); // the property must not hold vacuously
}

TEST_CASE("sweep of the full desk-scale window finds nothing feasible") {
    auto res = feasibility_sweep(25, 200);
    CHECK(res.feasible.empty());
    // sum over q of 5(q+1) combinations
    long long expect = 0;
    for (long long q = 25; q <= 200; ++q) expect += 5 * (q + 1);
    CHECK(res.checked == expect);
}

TEST_CASE("serial and parallel sweeps agree") {
    auto a = feasibility_sweep_serial(25, 60);
    auto b = feasibility_sweep(25, 60);
    CHECK(a.checked == b.checked);
    CHECK(a.feasible.size() == b.feasible.size());
}

TEST_CASE("range errors") {
    CHECK_THROWS_AS(spectrum_solve(24, 1, 0), RangeError);
    CHECK_THROWS_AS(spectrum_solve(25, 0, 0), RangeError);
    CHECK_THROWS_AS(spectrum_solve(25, 6, 0), RangeError);
    CHECK_THROWS_AS(spectrum_solve(25, 1, -1), RangeError);
    CHECK_THROWS_AS(feasibility_sweep(10, 20), RangeError);
}
