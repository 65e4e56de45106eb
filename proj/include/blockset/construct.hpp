#pragma once

#include "blockset/field.hpp"
#include "blockset/plane.hpp"
#include "blockset/quasifield.hpp"

namespace blockset {

// PG(2,q) over the given field. Points and lines are normalized homogeneous
// triples (leftmost nonzero coordinate 1) in lexicographic order; a point
// lies on a line iff the coordinate dot product vanishes.
IncidenceStructure build_desarguesian_projective(const FiniteField& field);

// AG(2,q): points (x,y) at index x*q + y; lines y = m*x + c at index m*q + c
// followed by the verticals x = c at index q*q + c.
IncidenceStructure build_desarguesian_affine(const FiniteField& field);

// Affine translation plane of order n over a quasifield: lines y = x*m + k
// at index m*n + k, verticals x = c at index n*n + c.
IncidenceStructure build_translation_plane(const Quasifield& qf);

// Index of the normalized projective triple (x0,x1,x2) in the lex order
// used by build_desarguesian_projective.
int projective_triple_index(const FiniteField& field, long x0, long x1, long x2);

} // namespace blockset
