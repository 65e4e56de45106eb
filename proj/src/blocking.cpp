#include "blockset/blocking.hpp"

#include <algorithm>
#include <cmath>

#include "blockset/transform.hpp"
#include "blockset/verify.hpp"

namespace blockset {

long long isqrt_ll(long long n) {
    if (n < 0) throw RangeError("isqrt of negative number");
    long long r = (long long)std::sqrt((double)n);
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

void validate_cover(const IncidenceStructure& s, const LineSet& L, int P) {
    if (s.kind != PlaneKind::projective)
        throw InvalidConfig("cover configuration requires a projective plane");
    check_line_set(s, L);
    if (P < 0 || P >= s.num_points)
        throw InvalidConfig("excluded point out of range");
    for (int l : s.point_lines[P])
        if (L.test(l))
            throw InvalidConfig("line " + std::to_string(l) +
                                " of L passes through the excluded point");
    std::vector<char> covered(s.num_points, 0);
    for (int l : L.to_indices())
        for (int p : s.line_points[l]) covered[p] = 1;
    for (int p = 0; p < s.num_points; ++p)
        if (p != P && !covered[p])
            throw InvalidConfig("point " + std::to_string(p) +
                                " is covered by no line of L");
}

BlockingCheck is_blocking(const IncidenceStructure& affine, const PointSet& S) {
    check_point_set(affine, S);
    for (int l = 0; l < affine.num_lines; ++l) {
        bool met = false;
        for (int p : affine.line_points[l])
            if (S.test(p)) { met = true; break; }
        if (!met) return {false, l};
    }
    return {true, std::nullopt};
}

std::vector<int> axes_indices(int q) {
    std::vector<int> out;
    out.reserve(2 * q - 1);
    for (int x = 0; x < q; ++x) out.push_back(x * q); // (x, 0)
    for (int y = 1; y < q; ++y) out.push_back(y);     // (0, y)
    std::sort(out.begin(), out.end());
    return out;
}

PointSet axes_construction(const IncidenceStructure& affine) {
    if (affine.provenance != "ag")
        throw NoCoordinates(
            "axes construction needs AG(2,q) coordinates (provenance 'ag')");
    auto idx = axes_indices(affine.order);
    return PointSet::from_indices(affine.num_points, idx);
}

PointSet greedy_blocking(const IncidenceStructure& affine, uint64_t) {
    HittingInstance inst{affine.num_points, affine.line_points};
    auto chosen = greedy_hitting(inst);
    return PointSet::from_indices(affine.num_points, chosen);
}

namespace {

Certificate make_certificate(const std::string& problem,
                             const std::string& provenance,
                             const HittingResult& r) {
    Certificate c;
    c.problem = problem;
    c.plane = provenance;
    c.value = r.value;
    c.witness = r.witness;
    c.status = r.proved_optimal ? "proved-optimal" : "budget-exhausted";
    c.nodes = r.nodes;
    c.ms = r.ms;
    return c;
}

} // namespace

void check_blocking_bound_guard(const IncidenceStructure& affine,
                                const Certificate& cert) {
    if (cert.status != "proved-optimal") return;
    if (affine.provenance == "ag" && cert.value < 2 * affine.order - 1)
        throw BoundViolation(
            "proved-optimal blocking set of size " +
            std::to_string(cert.value) + " in AG(2," +
            std::to_string(affine.order) + ") is below 2q-1");
}

void check_cover_bound_guard(int order, const Certificate& cert) {
    if (cert.status != "proved-optimal" || order < 25) return;
    long long bound = order + isqrt_ll(order) + 3;
    if (cert.value < bound)
        throw BoundViolation("proved-optimal cover of size " +
                             std::to_string(cert.value) +
                             " in a plane of order " + std::to_string(order) +
                             " is below q+floor(sqrt(q))+3");
}

Certificate min_blocking(const IncidenceStructure& affine,
                         const SearchOptions& opts) {
    if (affine.kind != PlaneKind::affine)
        throw NotAffine("minimum blocking set search requires an affine plane");
    HittingInstance inst{affine.num_points, affine.line_points};
    HittingResult r = solve_min_hitting(inst, opts);
    Certificate c = make_certificate("min-blocking", affine.provenance, r);
    check_blocking_bound_guard(affine, c);
    return c;
}

Certificate min_cover_excluding(const IncidenceStructure& projective, int P,
                                const SearchOptions& opts) {
    if (projective.kind != PlaneKind::projective)
        throw NotProjective("cover search requires a projective plane");
    if (P < 0 || P >= projective.num_points)
        throw StructureMismatch("excluded point out of range");

    // Dual hitting problem: elements are the lines avoiding P, constraints
    // are the points other than P, each hit by its incident candidate lines.
    std::vector<int> candidate; // universe element -> original line
    std::vector<int> line_to_elem(projective.num_lines, -1);
    for (int l = 0; l < projective.num_lines; ++l) {
        if (!projective.point_on_line(P, l)) {
            line_to_elem[l] = int(candidate.size());
            candidate.push_back(l);
        }
    }
    HittingInstance inst;
    inst.universe = int(candidate.size());
    inst.sets.reserve(projective.num_points - 1);
    for (int p = 0; p < projective.num_points; ++p) {
        if (p == P) continue;
        std::vector<int> elems;
        for (int l : projective.point_lines[p])
            if (line_to_elem[l] >= 0) elems.push_back(line_to_elem[l]);
        inst.sets.push_back(std::move(elems));
    }

    HittingResult r = solve_min_hitting(inst, opts);
    for (int& e : r.witness) e = candidate[e];
    std::sort(r.witness.begin(), r.witness.end());

    Certificate c =
        make_certificate("min-cover-excluding", projective.provenance, r);
    check_cover_bound_guard(projective.order, c);
    return c;
}

CoverConfig dual_transfer(const IncidenceStructure& affine,
                          const PointSet& S) {
    BlockingCheck chk = is_blocking(affine, S);
    if (!chk.blocking)
        throw NotBlocking("set misses line " +
                          std::to_string(*chk.unblocked_line));

    Completion comp = complete(affine);
    IncidenceStructure dual = dualize(comp.plane);

    CoverConfig cfg;
    cfg.excluded_point = comp.infinity_line; // dual point of l_inf
    cfg.lines = LineSet::from_indices(dual.num_lines, S.to_indices());
    cfg.plane = std::move(dual);
    validate_cover(cfg.plane, cfg.lines, cfg.excluded_point);
    return cfg;
}

} // namespace blockset
