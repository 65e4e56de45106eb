// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Run through ctest or directly; --stretch adds the slow q = 7
// search.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "blockset/blocking.hpp"
#include "blockset/construct.hpp"
#include "blockset/inequality_audit.hpp"
#include "blockset/knot_tuple.hpp"
#include "blockset/knots.hpp"
#include "blockset/plane_io.hpp"
#include "blockset/rng.hpp"
#include "blockset/spectrum_solve.hpp"
#include "blockset/transform.hpp"
#include "blockset/verify.hpp"

using namespace blockset;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void criterion(const std::string& name, double limit_s,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    auto t0 = Clock::now();
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
        ok = false;
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (limit_s > 0 && secs > limit_s) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("over the ") +
                  std::to_string((int)limit_s) + "s limit";
    }
    std::printf("%s  %-24s %6.2fs  %s\n", ok ? "PASS" : "FAIL", name.c_str(),
                secs, detail.c_str());
    if (!ok) ++g_failures;
}

FiniteField gf_of_order(long q) {
    long p = q;
    for (long d = 2; d * d <= q; ++d)
        if (q % d == 0) { p = d; break; }
    int e = 0;
    long v = q;
    while (v > 1) { v /= p; ++e; }
    return FiniteField::make(p, e);
}

bool same_structure(const IncidenceStructure& a, const IncidenceStructure& b) {
    return a.kind == b.kind && a.order == b.order &&
           a.num_points == b.num_points && a.num_lines == b.num_lines &&
           a.line_points == b.line_points && a.point_lines == b.point_lines;
}

} // namespace

int main(int argc, char** argv) {
    bool stretch = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--stretch") == 0) stretch = true;

    // 1. exact minimum blocking sets hit the 2q-1 floor at desk scale
    criterion("exact-minimum", 240, [&](std::string& detail) {
        struct Row { long q; int want; };
        for (Row row : {Row{2, 3}, Row{3, 5}, Row{4, 7}, Row{5, 9}}) {
            auto ag = build_desarguesian_affine(gf_of_order(row.q));
            SearchOptions opts; // deterministic single-threaded
            auto t0 = Clock::now();
            auto cert = min_blocking(ag, opts);
            double secs =
                std::chrono::duration<double>(Clock::now() - t0).count();
            auto axes = axes_construction(ag);
            bool tight = axes.count() == row.want &&
                         is_blocking(ag, axes).blocking;
            if (cert.value != row.want || cert.status != "proved-optimal" ||
                secs > 60 || !tight) {
                detail = "q=" + std::to_string(row.q) + " value " +
                         std::to_string(cert.value) + " (" + cert.status +
                         ")";
                return false;
            }
        }
        detail = "values 3,5,7,9 proved optimal; axes sets attain them";
        return true;
    });

    if (stretch) {
        criterion("exact-minimum-q7", 900, [&](std::string& detail) {
            auto ag = build_desarguesian_affine(gf_of_order(7));
            auto cert = min_blocking(ag, {});
            detail = "value " + std::to_string(cert.value) + ", " +
                     std::to_string(cert.nodes) + " nodes";
            return cert.value == 13 && cert.status == "proved-optimal";
        });
    }

    // 2. the dual cover problem agrees with the primal, exactly
    criterion("duality", 60, [&](std::string& detail) {
        for (long q : {2L, 3L}) {
            auto ag = build_desarguesian_affine(gf_of_order(q));
            auto mb = min_blocking(ag, {});
            auto comp = complete(ag);
            auto dual = dualize(comp.plane);
            auto mc = min_cover_excluding(dual, comp.infinity_line, {});
            if (mb.value != mc.value || mb.value != 2 * q - 1 ||
                mc.status != "proved-optimal") {
                detail = "q=" + std::to_string(q) + ": blocking " +
                         std::to_string(mb.value) + " vs cover " +
                         std::to_string(mc.value);
                return false;
            }
            auto S = PointSet::from_indices(ag.num_points, mb.witness);
            auto cfg = dual_transfer(ag, S);
            if (cfg.lines.count() != mb.value) {
                detail = "transferred size mismatch";
                return false;
            }
            validate_cover(cfg.plane, cfg.lines, cfg.excluded_point);
        }
        detail = "cover = blocking = 3 and 5; transfers validate";
        return true;
    });

    // 3. counting identities on 1000 seeded random line sets per plane
    criterion("counting-identities", 60, [&](std::string& detail) {
        long long sets = 0;
        for (long q : {2L, 3L, 4L, 5L, 7L, 8L, 9L}) {
            auto pg = build_desarguesian_projective(gf_of_order(q));
            auto res = counts_property_run(pg, 1000, 2024 + (uint64_t)q);
            sets += res.arbitrary_checked + res.covers_checked;
            if (!res.pass()) {
                detail = "q=" + std::to_string(q) + ": " + res.first_failure;
                return false;
            }
        }
        detail = std::to_string(sets) + " line sets across 7 planes, all exact";
        return true;
    });

    // 4. tuple-bound oracle equivalence and the rebalance potential
    criterion("tuple-bound-oracle", 120, [&](std::string& detail) {
        for (int b = 2; b <= 7; ++b)
            for (long long k = 0; k <= 25; ++k) {
                long long bound = afschatting_bound(b, k);
                if (afschatting_brute(b, k).min_value != bound ||
                    canonical_extremal(b, k).objective() != bound) {
                    detail = "mismatch at b=" + std::to_string(b) +
                             " k=" + std::to_string(k);
                    return false;
                }
            }
        SplitMix64 rng(7);
        for (int trial = 0; trial < 10000; ++trial) {
            int b = 2 + int(rng.below(7));
            std::vector<long long> a(b, 0);
            for (int i = 1; i < b; ++i) a[i] = (long long)rng.below(4);
            KnotTuple cur(b, a);
            long long k = cur.weight();
            long long pot = cur.sum_squares();
            while (auto nxt = rebalance_step(cur)) {
                if (nxt->weight() != k || nxt->sum_squares() <= pot) {
                    detail = "rebalance invariant broken at trial " +
                             std::to_string(trial);
                    return false;
                }
                pot = nxt->sum_squares();
                cur = *nxt;
            }
            long long m = k % (b - 1), l = (k - m) / (b - 1);
            if (cur.sum_squares() != l * (b - 1) * (b - 1) + m * m) {
                detail = "terminal potential wrong at trial " +
                         std::to_string(trial);
                return false;
            }
        }
        detail = "brute = bound = extremal on [2,7]x[0,25]; 10^4 "
                 "rebalance trials clean";
        return true;
    });

    // 5. integer inequality audit over [2, 10^4]
    criterion("inequality-audit", 60, [&](std::string& detail) {
        auto rep = inequality_audit(2, 10000);
        if (!rep.pass()) {
            for (const auto& c : rep.claims)
                if (!c.violations.empty())
                    detail += c.claim + " at q=" +
                              std::to_string(c.violations.front()) + " ";
            return false;
        }
        long long evaluated = 0;
        bool saw_mod5 = false, saw_endpoint = false;
        for (const auto& c : rep.claims) {
            evaluated += c.evaluated;
            if (c.claim == "mod5-contradiction" && c.evaluated == 1)
                saw_mod5 = true;
            if (c.claim == "cubic-endpoint-min" && c.evaluated == 10000 - 24)
                saw_endpoint = true;
        }
        detail = std::to_string(evaluated) +
                 " claim evaluations, zero violations";
        return saw_mod5 && saw_endpoint;
    });

    // 6. feasibility sweep: no spectrum survives the gates
    criterion("feasibility-sweep", 30, [&](std::string& detail) {
        auto res = feasibility_sweep(25, 200);
        if (!res.feasible.empty()) {
            detail = std::to_string(res.feasible.size()) + " feasible rows";
            return false;
        }
        for (long long d = 1; d <= 5; ++d)
            for (long long b = 0; b <= 25; ++b)
                if (spectrum_solve(25, d, b).first_failure != "integrality") {
                    detail = "q=25 should fail integrality (598 = 5a has no "
                             "integer solution)";
                    return false;
                }
        detail = std::to_string(res.checked) +
                 " (q,d,b) combinations all infeasible; q=25 by integrality";
        return true;
    });

    // 7. a non-desarguesian instance behaves as expected
    criterion("non-desarguesian", 300, [&](std::string& detail) {
        auto hall = build_translation_plane(Quasifield::hall(3));
        auto comp = complete(hall);
        if (comp.plane.num_points != 91 || comp.plane.num_lines != 91) {
            detail = "completed hall plane has wrong counts";
            return false;
        }
        if (!verify_axioms(comp.plane).pass) {
            detail = "completed hall plane fails the axiom suite";
            return false;
        }
        auto w = desargues_violation(comp.plane, 1000000, 1);
        if (!w || !recheck_desargues_witness(comp.plane, *w)) {
            detail = "no re-checkable witness in the hall plane";
            return false;
        }
        auto pg9 = build_desarguesian_projective(gf_of_order(9));
        if (desargues_violation(pg9, 100000, 1)) {
            detail = "witness found in PG(2,9)";
            return false;
        }
        detail = "hall witness found and rechecked; PG(2,9) clean";
        return true;
    });

    // 8. structural round trips are exact
    criterion("round-trips", 120, [&](std::string& detail) {
        std::vector<IncidenceStructure> affines, projectives;
        for (long q : {2L, 3L, 4L, 5L, 7L, 8L, 9L}) {
            affines.push_back(build_desarguesian_affine(gf_of_order(q)));
            projectives.push_back(
                build_desarguesian_projective(gf_of_order(q)));
        }
        affines.push_back(build_translation_plane(Quasifield::hall(3)));
        affines.push_back(
            build_translation_plane(Quasifield::from_field(gf_of_order(4))));

        for (const auto& pg : projectives) {
            if (!same_structure(pg, dualize(dualize(pg)))) {
                detail = "dual involution broken at order " +
                         std::to_string(pg.order);
                return false;
            }
            if (serialize_plane(parse_plane(serialize_plane(pg))) !=
                serialize_plane(pg)) {
                detail = "io round trip broken at order " +
                         std::to_string(pg.order);
                return false;
            }
        }
        for (const auto& ag : affines) {
            auto comp = complete(ag);
            auto back = restrict_plane(comp.plane, comp.infinity_line);
            if (!same_structure(ag, back)) {
                detail = "complete/restrict round trip broken at order " +
                         std::to_string(ag.order);
                return false;
            }
            if (serialize_plane(parse_plane(serialize_plane(ag))) !=
                serialize_plane(ag)) {
                detail = "io round trip broken at order " +
                         std::to_string(ag.order);
                return false;
            }
        }
        detail = "dual involution, complete/restrict identity, byte-exact io";
        return true;
    });

    // 9. what desk scale cannot reach, and what stands in for it
    criterion("large-order-coverage", 10, [&](std::string& detail) {
        // The q >= 25 lower bound q + floor(sqrt(q)) + 3 is not confirmable
        // by exhaustive search here: an order-25 plane has 651 points and
        // the cover search space is astronomically large. It is covered by
        // the audit criteria above and by a tripwire on every
        // proved-optimal cover in planes of order >= 25.
        Certificate fake;
        fake.status = "proved-optimal";
        fake.value = 32; // below 25 + 5 + 3
        bool fired = false;
        try {
            check_cover_bound_guard(25, fake);
        } catch (const BoundViolation&) {
            fired = true;
        }
        if (!fired) {
            detail = "tripwire did not fire on a below-bound certificate";
            return false;
        }
        fake.value = 33;
        check_cover_bound_guard(25, fake); // must not throw
        detail = "bound not searchable at desk scale; audits + armed "
                 "tripwire stand in";
        return true;
    });

    std::printf("%s: %d criterion(s) failed\n",
                g_failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
                g_failures);
    return g_failures == 0 ? 0 : 1;
}
