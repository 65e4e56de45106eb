#pragma once

#include <string>
#include <vector>

#include "blockset/errors.hpp"

namespace blockset {

// Closed-form solution of the three standard counting identities under
// |L| = q + s + 2, top knot s + 2 with multiplicity d, and knot values
// restricted to {1, 2, s+1, s+2}, s = floor(sqrt(q)). The parameters must
// thread through two divisibility gates:
//   q^2 - q - 2 = a s            (x_1 integral)
//   a = 2(d-1) + b(s-1)          (x_2 integral)
// after which
//   x_1 = q^2 - qs - q + bs + d - 3 - b
//   x_2 = qs + 2q - d - bs + 2
//   x_{s+1} = 1 - d + b.
struct SpectrumSolution {
    long long q = 0, s = 0;
    long long d = 0, b = 0;
    long long a = 0; // 2(d-1) + b(s-1)
    long long x1 = 0, x2 = 0, xs1 = 0; // valid only when integrality holds
    bool integrality = false; // q^2 - q - 2 == a*s
    bool nonneg = false;      // x1, x2, x_{s+1} >= 0
    bool bigknot_ok = false;  // d + x_{s+1} <= q + 1
    bool b_ok = false;        // b <= q
    bool feasible = false;
    std::string first_failure; // "" when feasible
};

// q >= 25, 1 <= d <= 5, 0 <= b. Throws RangeError outside.
SpectrumSolution spectrum_solve(long long q, long long d, long long b);

struct SweepResult {
    long long checked = 0;
    std::vector<SpectrumSolution> feasible; // expected empty
};

// Enumerates d in [1,5], b in [0,q] for every integer q in range. The
// parallel version partitions over q; results are q-independent counts
// plus any feasible rows, so reports agree with the serial one.
SweepResult feasibility_sweep(long long q_lo, long long q_hi);
SweepResult feasibility_sweep_serial(long long q_lo, long long q_hi);

} // namespace blockset
