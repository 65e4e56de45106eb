#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "blockset/construct.hpp"
#include "blockset/transform.hpp"
#include "blockset/verify.hpp"

using namespace blockset;

namespace {
FiniteField gf(long p, int e) { return FiniteField::make(p, e); }
} // namespace

TEST_CASE("PG(2,5) passes the exhaustive pair checks") {
    auto s = build_desarguesian_projective(gf(5, 1));
    auto rep = verify_axioms(s);
    CHECK(rep.pass);
    CHECK(rep.violations.empty());
}

TEST_CASE("a flipped incidence is caught with a pair witness") {
    auto s = build_desarguesian_projective(gf(2, 1));
    // swap one point of line 0 for a point not on it
    int off = -1;
    for (int p = 0; p < s.num_points; ++p)
        if (!s.point_on_line(p, 0)) { off = p; break; }
    auto pts = s.line_points[0];
    pts[0] = off;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    s.line_points[0] = pts;
    s.derive_point_lines();

    auto rep = verify_axioms(s);
    CHECK_FALSE(rep.pass);
    bool names_pair = false;
    for (const auto& v : rep.violations)
        if (v.check == "point-pair" || v.check == "line-pair")
            names_pair = true;
    CHECK(names_pair);
}

TEST_CASE("dropping an incidence is caught") {
    auto s = build_desarguesian_affine(gf(3, 1));
    s.line_points[4].pop_back();
    s.derive_point_lines();
    auto rep = verify_axioms(s);
    CHECK_FALSE(rep.pass);
    CHECK(!rep.violations.empty());
}

TEST_CASE("AG(2,4) passes including Playfair") {
    auto s = build_desarguesian_affine(gf(2, 2));
    CHECK(verify_axioms(s).pass);
}

TEST_CASE("wrong declared order is reported") {
    auto s = build_desarguesian_projective(gf(2, 1));
    s.order = 3;
    auto rep = verify_axioms(s);
    CHECK_FALSE(rep.pass);
}

TEST_CASE("inconsistent maps are reported") {
    auto s = build_desarguesian_projective(gf(2, 1));
    s.point_lines[0].pop_back();
    auto rep = verify_axioms(s);
    CHECK_FALSE(rep.pass);
    CHECK(rep.violations[0].check == "consistency");
}

TEST_CASE("reports are deterministic and capped at ten violations") {
    auto s = build_desarguesian_projective(gf(3, 1));
    for (auto& l : s.line_points) l.pop_back(); // break everything
    s.derive_point_lines();
    auto a = verify_axioms(s);
    auto b = verify_axioms(s);
    CHECK_FALSE(a.pass);
    CHECK(a.violations.size() <= 10);
    REQUIRE(a.violations.size() == b.violations.size());
    for (size_t i = 0; i < a.violations.size(); ++i) {
        CHECK(a.violations[i].check == b.violations[i].check);
        CHECK(a.violations[i].witness == b.violations[i].witness);
    }
}

TEST_CASE("desargues: hall plane yields a re-checkable witness") {
    auto hall = build_translation_plane(Quasifield::hall(3));
    auto comp = complete(hall);
    auto w = desargues_violation(comp.plane, 1000000, 1);
    REQUIRE(w.has_value());
    CHECK(recheck_desargues_witness(comp.plane, *w));

    // a tampered witness must not recheck
    auto bad = *w;
    bad.axis[2] = bad.axis[1];
    CHECK_FALSE(recheck_desargues_witness(comp.plane, bad));
}

TEST_CASE("desargues: coordinatized planes yield no witness") {
    auto pg = build_desarguesian_projective(gf(3, 1));
    CHECK_FALSE(desargues_violation(pg, 100000, 1).has_value());
}

TEST_CASE("desargues: zero budget finds nothing") {
    auto pg = build_desarguesian_projective(gf(2, 1));
    CHECK_FALSE(desargues_violation(pg, 0, 7).has_value());
}

TEST_CASE("desargues search is deterministic in the seed") {
    auto hall = build_translation_plane(Quasifield::hall(3));
    auto comp = complete(hall);
    auto w1 = desargues_violation(comp.plane, 100000, 42);
    auto w2 = desargues_violation(comp.plane, 100000, 42);
    REQUIRE(w1.has_value());
    REQUIRE(w2.has_value());
    CHECK(w1->center == w2->center);
    CHECK(w1->a == w2->a);
    CHECK(w1->b == w2->b);
    CHECK(w1->axis == w2->axis);
}
