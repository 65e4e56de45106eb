#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "blockset/plane.hpp"

namespace blockset {

struct Violation {
    std::string check;        // which axiom failed
    std::vector<int> witness; // offending indices
    std::string detail;
};

struct VerifyReport {
    bool pass = true;
    std::vector<Violation> violations; // first <= 10, ordered by index
    std::string summary() const;
};

// Exhaustive axiom check for the declared kind. The parallel version
// partitions the O(N^2) pair checks across OpenMP threads; its report is
// identical to the serial one (violations ordered by check, then index).
VerifyReport verify_axioms(const IncidenceStructure& s);
VerifyReport verify_axioms_serial(const IncidenceStructure& s);

struct AxiomError : Error {
    VerifyReport report;
    explicit AxiomError(VerifyReport r)
        : Error("axiom verification failed: " + r.summary()),
          report(std::move(r)) {}
};

// A sampled configuration falsifying Desargues' theorem: triangles
// a[0]a[1]a[2] and b[0]b[1]b[2] in perspective from `center`, whose three
// axis points are not collinear. Re-checkable from the ten points alone.
struct DesarguesWitness {
    int center;
    std::array<int, 3> a;
    std::array<int, 3> b;
    std::array<int, 3> axis;
};

std::optional<DesarguesWitness>
desargues_violation(const IncidenceStructure& projective, long budget,
                    uint64_t seed);

// Independent recheck of a witness from its ten points.
bool recheck_desargues_witness(const IncidenceStructure& projective,
                               const DesarguesWitness& w);

} // namespace blockset
