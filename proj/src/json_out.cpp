#include "blockset/json_out.hpp"

namespace blockset {

using nlohmann::json;

json to_json(const Certificate& c) {
    return json{{"problem", c.problem}, {"plane", c.plane},
                {"value", c.value},     {"witness", c.witness},
                {"status", c.status},   {"nodes", c.nodes},
                {"ms", c.ms}};
}

json to_json(const KnotSpectrum& s) {
    json j{{"q", s.q}, {"L", s.line_count}, {"x", s.x}, {"k", s.max_knot}};
    if (s.excluded) j["P"] = *s.excluded;
    else j["P"] = nullptr;
    return j;
}

json to_json(const AuditReport& r) {
    json arr = json::array();
    for (const auto& e : r.entries) {
        json j{{"claim", e.claim}, {"applicable", e.applicable}};
        if (e.holds) j["holds"] = *e.holds;
        else j["holds"] = nullptr;
        arr.push_back(std::move(j));
    }
    return arr;
}

json to_json(const InequalityAuditReport& r) {
    json claims = json::array();
    for (const auto& c : r.claims) {
        claims.push_back(json{{"claim", c.claim},
                              {"q_range", json::array({c.range_lo, c.range_hi})},
                              {"evaluated", c.evaluated},
                              {"violations", c.violations}});
    }
    return json{{"q_lo", r.q_lo}, {"q_hi", r.q_hi}, {"claims", claims}};
}

json to_json(const VerifyReport& r) {
    json v = json::array();
    for (const auto& x : r.violations)
        v.push_back(json{{"check", x.check},
                         {"witness", x.witness},
                         {"detail", x.detail}});
    return json{{"pass", r.pass}, {"violations", v}};
}

json to_json(const SpectrumSolution& s) {
    json j{{"q", s.q},
           {"d", s.d},
           {"b", s.b},
           {"a", s.a},
           {"feasible", s.feasible},
           {"first_failure", s.first_failure}};
    if (s.integrality) {
        j["x1"] = s.x1;
        j["x2"] = s.x2;
        j["x_s_plus_1"] = s.xs1;
    }
    return j;
}

} // namespace blockset
