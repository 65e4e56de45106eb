#pragma once

#include <json.hpp>

#include "blockset/blocking.hpp"
#include "blockset/inequality_audit.hpp"
#include "blockset/knots.hpp"
#include "blockset/spectrum_solve.hpp"
#include "blockset/verify.hpp"

namespace blockset {

// {"problem","plane","value","witness","status","nodes","ms"}
nlohmann::json to_json(const Certificate& c);

// {"q","L","P","x","k"} with P null when absent
nlohmann::json to_json(const KnotSpectrum& s);

// [{"claim","applicable","holds"}] with holds null when inapplicable
nlohmann::json to_json(const AuditReport& r);

// {"q_lo","q_hi","claims":[{"claim","q_range":[lo,hi],"violations":[...]}]}
nlohmann::json to_json(const InequalityAuditReport& r);

nlohmann::json to_json(const VerifyReport& r);

nlohmann::json to_json(const SpectrumSolution& s);

} // namespace blockset
