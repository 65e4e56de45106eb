#include "blockset/spectrum_solve.hpp"

#include <algorithm>

#include "blockset/blocking.hpp" // isqrt_ll

namespace blockset {

SpectrumSolution spectrum_solve(long long q, long long d, long long b) {
    if (q < 25 || q > 1000000)
        throw RangeError("spectrum_solve needs 25 <= q <= 10^6");
    if (d < 1 || d > 5) throw RangeError("spectrum_solve needs 1 <= d <= 5");
    if (b < 0) throw RangeError("spectrum_solve needs b >= 0");

    SpectrumSolution sol;
    sol.q = q;
    sol.s = isqrt_ll(q);
    sol.d = d;
    sol.b = b;
    const long long s = sol.s;
    sol.a = 2 * (d - 1) + b * (s - 1);

    sol.integrality = (q * q - q - 2 == sol.a * s);
    if (!sol.integrality) {
        sol.first_failure = "integrality";
        return sol; // x values stay uncomputed
    }

    sol.x1 = q * q - q * s - q + b * s + d - 3 - b;
    sol.x2 = q * s + 2 * q - d - b * s + 2;
    sol.xs1 = 1 - d + b;

    sol.nonneg = sol.x1 >= 0 && sol.x2 >= 0 && sol.xs1 >= 0;
    sol.bigknot_ok = d + sol.xs1 <= q + 1;
    sol.b_ok = b <= q;
    sol.feasible = sol.nonneg && sol.bigknot_ok && sol.b_ok;
    if (!sol.feasible) {
        if (!sol.nonneg) sol.first_failure = "nonnegativity";
        else if (!sol.bigknot_ok) sol.first_failure = "bigknot";
        else sol.first_failure = "b-bound";
    }
    return sol;
}

namespace {

SweepResult sweep_impl(long long q_lo, long long q_hi, bool parallel) {
    if (q_lo < 25 || q_hi < q_lo || q_hi > 1000000)
        throw RangeError("sweep range must satisfy 25 <= lo <= hi <= 10^6");

    long long nq = q_hi - q_lo + 1;
    std::vector<long long> checked(nq, 0);
    std::vector<std::vector<SpectrumSolution>> feasible(nq);

    auto run_q = [&](long long qi) {
        long long q = q_lo + qi;
        for (long long d = 1; d <= 5; ++d) {
            for (long long b = 0; b <= q; ++b) {
                SpectrumSolution sol = spectrum_solve(q, d, b);
                ++checked[qi];
                if (sol.feasible) feasible[qi].push_back(sol);
            }
        }
    };

#ifdef _OPENMP
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long long qi = 0; qi < nq; ++qi) run_q(qi);
    } else
#endif
    {
        (void)parallel;
        for (long long qi = 0; qi < nq; ++qi) run_q(qi);
    }

    SweepResult res;
    for (long long qi = 0; qi < nq; ++qi) {
        res.checked += checked[qi];
        for (auto& s : feasible[qi]) res.feasible.push_back(s);
    }
    return res;
}

} // namespace

SweepResult feasibility_sweep(long long q_lo, long long q_hi) {
    return sweep_impl(q_lo, q_hi, true);
}

SweepResult feasibility_sweep_serial(long long q_lo, long long q_hi) {
    return sweep_impl(q_lo, q_hi, false);
}

} // namespace blockset
