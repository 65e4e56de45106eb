#pragma once

#include <string>
#include <string_view>

#include "blockset/plane.hpp"

namespace blockset {

// Canonical text form:
//   plane <projective|affine>
//   order <q>
//   points <N>
//   lines <M>
//   L <i1> <i2> ... <ik>       (M lines, strictly increasing indices)
// Single spaces, '\n' endings, no trailing whitespace. '#' comment lines
// are accepted on input anywhere and never emitted.
std::string serialize_plane(const IncidenceStructure& s);

// Parses and verifies. Throws ParseError (with line/column), AxiomError
// (carrying the verification report), or IoError.
IncidenceStructure parse_plane(std::string_view text);

IncidenceStructure load_plane(const std::string& path);
void save_plane(const IncidenceStructure& s, const std::string& path);

} // namespace blockset
