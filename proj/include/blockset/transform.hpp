#pragma once

#include "blockset/plane.hpp"

namespace blockset {

struct Completion {
    IncidenceStructure plane; // projective, same order
    int infinity_line;        // the adjoined line through the class points
};

// Adjoins one point per parallel class (indices N..N+q, classes ordered by
// least member line) and the line at infinity (index M). Throws NotAffine
// when the input fails the affine axioms.
Completion complete(const IncidenceStructure& affine);

// Deletes a line and its points, renumbering the rest order-preservingly.
// restrict_plane(complete(A).plane, infinity_line) reproduces A with
// identical indices. Throws NotProjective on bad input.
IncidenceStructure restrict_plane(const IncidenceStructure& projective,
                                  int line);

// Label-preserving transpose: point i of the dual is line i of the input.
// An involution on the nose. Throws NotProjective on bad input.
IncidenceStructure dualize(const IncidenceStructure& projective);

} // namespace blockset
