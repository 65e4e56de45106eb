#include "blockset/verify.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace blockset {

namespace {

constexpr int kMaxViolations = 10;
constexpr int kChunkRows = 64;

// Runs f(chunk) for chunk in [0, nchunks), in parallel when requested.
// Callers keep per-chunk outputs so results merge deterministically.
template <typename Fn>
void run_chunks(int nchunks, bool parallel, Fn&& f) {
#ifdef _OPENMP
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int c = 0; c < nchunks; ++c) f(c);
        return;
    }
#endif
    (void)parallel;
    for (int c = 0; c < nchunks; ++c) f(c);
}

void append_capped(std::vector<Violation>& out, Violation v) {
    if (int(out.size()) < kMaxViolations) out.push_back(std::move(v));
}

// Range/sortedness/consistency problems make the pair checks meaningless,
// so they are verified first and abort the report when broken.
bool well_formed(const IncidenceStructure& s, std::vector<Violation>& out) {
    bool ok = true;
    if (s.num_points <= 0 || s.num_lines <= 0 ||
        int(s.line_points.size()) != s.num_lines ||
        int(s.point_lines.size()) != s.num_points) {
        out.push_back({"well-formed", {}, "incidence list sizes disagree with declared counts"});
        return false;
    }
    for (int l = 0; l < s.num_lines && ok; ++l) {
        const auto& pts = s.line_points[l];
        for (size_t i = 0; i < pts.size(); ++i) {
            if (pts[i] < 0 || pts[i] >= s.num_points) {
                append_capped(out, {"well-formed", {l, pts[i]}, "point index out of range"});
                ok = false;
                break;
            }
            if (i > 0 && pts[i] <= pts[i - 1]) {
                append_capped(out, {"well-formed", {l}, "line point list not strictly increasing"});
                ok = false;
                break;
            }
        }
    }
    if (!ok) return false;
    // mutual consistency of the two incidence maps
    IncidenceStructure tmp;
    tmp.num_points = s.num_points;
    tmp.line_points = s.line_points;
    tmp.derive_point_lines();
    if (tmp.point_lines != s.point_lines) {
        out.push_back({"consistency", {}, "point->line map disagrees with line->point map"});
        return false;
    }
    return true;
}

void check_counts(const IncidenceStructure& s, std::vector<Violation>& out) {
    if (s.order < 2) {
        append_capped(out, {"counts", {s.order}, "order must be at least 2"});
        return;
    }
    PlaneCounts exp = expected_counts(s.kind, s.order);
    if (s.num_points != exp.points)
        append_capped(out, {"counts", {s.num_points, exp.points}, "point count"});
    if (s.num_lines != exp.lines)
        append_capped(out, {"counts", {s.num_lines, exp.lines}, "line count"});
}

void check_line_sizes(const IncidenceStructure& s, std::vector<Violation>& out) {
    int want = expected_counts(s.kind, s.order).points_per_line;
    for (int l = 0; l < s.num_lines; ++l)
        if (int(s.line_points[l].size()) != want)
            append_capped(out, {"line-size", {l, int(s.line_points[l].size()), want}, "points on line"});
}

void check_point_degrees(const IncidenceStructure& s, std::vector<Violation>& out) {
    int want = expected_counts(s.kind, s.order).lines_per_point;
    for (int p = 0; p < s.num_points; ++p)
        if (int(s.point_lines[p].size()) != want)
            append_capped(out, {"point-degree", {p, int(s.point_lines[p].size()), want}, "lines through point"});
}

int common_line_count(const IncidenceStructure& s, int p1, int p2) {
    const auto& a = s.point_lines[p1];
    const auto& b = s.point_lines[p2];
    size_t i = 0, j = 0;
    int n = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (a[i] > b[j]) ++j;
        else { ++n; ++i; ++j; }
    }
    return n;
}

// Any two distinct points lie on exactly one common line.
void check_point_pairs(const IncidenceStructure& s, bool parallel,
                       std::vector<Violation>& out) {
    int n = s.num_points;
    int nchunks = (n + kChunkRows - 1) / kChunkRows;
    std::vector<std::vector<Violation>> per_chunk(nchunks);
    run_chunks(nchunks, parallel, [&](int c) {
        int lo = c * kChunkRows, hi = std::min(n, lo + kChunkRows);
        auto& local = per_chunk[c];
        for (int p = lo; p < hi; ++p) {
            for (int r = p + 1; r < n; ++r) {
                int k = common_line_count(s, p, r);
                if (k != 1) {
                    append_capped(local, {"point-pair", {p, r, k}, "common lines of a point pair"});
                    if (int(local.size()) >= kMaxViolations) return;
                }
            }
        }
    });
    for (auto& chunk : per_chunk)
        for (auto& v : chunk) append_capped(out, std::move(v));
}

// Projective: any two distinct lines meet in exactly one point.
void check_line_pairs(const IncidenceStructure& s, bool parallel,
                      std::vector<Violation>& out) {
    int m = s.num_lines;
    int nchunks = (m + kChunkRows - 1) / kChunkRows;
    std::vector<std::vector<Violation>> per_chunk(nchunks);
    run_chunks(nchunks, parallel, [&](int c) {
        int lo = c * kChunkRows, hi = std::min(m, lo + kChunkRows);
        auto& local = per_chunk[c];
        for (int l = lo; l < hi; ++l) {
            for (int g = l + 1; g < m; ++g) {
                int k = s.line_intersection_size(l, g);
                if (k != 1) {
                    append_capped(local, {"line-pair", {l, g, k}, "common points of a line pair"});
                    if (int(local.size()) >= kMaxViolations) return;
                }
            }
        }
    });
    for (auto& chunk : per_chunk)
        for (auto& v : chunk) append_capped(out, std::move(v));
}

// Affine Playfair axiom: for every line l and point Q off l, exactly one
// line through Q misses l.
void check_playfair(const IncidenceStructure& s, bool parallel,
                    std::vector<Violation>& out) {
    int n = s.num_points;
    std::vector<PointSet> line_bits;
    line_bits.reserve(s.num_lines);
    for (int l = 0; l < s.num_lines; ++l)
        line_bits.push_back(PointSet::from_indices(n, s.line_points[l]));

    int nchunks = (n + kChunkRows - 1) / kChunkRows;
    std::vector<std::vector<Violation>> per_chunk(nchunks);
    run_chunks(nchunks, parallel, [&](int c) {
        int lo = c * kChunkRows, hi = std::min(n, lo + kChunkRows);
        auto& local = per_chunk[c];
        for (int p = lo; p < hi; ++p) {
            for (int l = 0; l < s.num_lines; ++l) {
                if (line_bits[l].test(p)) continue;
                int missing = 0;
                for (int g : s.point_lines[p])
                    if (!line_bits[g].intersects(line_bits[l])) ++missing;
                if (missing != 1) {
                    append_capped(local, {"playfair", {p, l, missing}, "parallels through point"});
                    if (int(local.size()) >= kMaxViolations) return;
                }
            }
        }
    });
    for (auto& chunk : per_chunk)
        for (auto& v : chunk) append_capped(out, std::move(v));
}

// Projective non-degeneracy: a quadrilateral (4 points, no 3 collinear).
// Constructive: two points on one line, two on a second line through a
// different carrier, checked explicitly. Bounded scan over line pairs.
void check_quadrilateral(const IncidenceStructure& s,
                         std::vector<Violation>& out) {
    const int budget = 100;
    int tried = 0;
    auto collinear = [&](int a, int b, int c) {
        auto l = s.common_line(a, b);
        return l && s.point_on_line(c, *l);
    };
    for (int l1 = 0; l1 < s.num_lines && tried < budget; ++l1) {
        for (int l2 = l1 + 1; l2 < s.num_lines && tried < budget; ++l2) {
            ++tried;
            if (s.line_intersection_size(l1, l2) != 1) continue;
            int x = -1;
            for (int p : s.line_points[l1])
                if (s.point_on_line(p, l2)) { x = p; break; }
            std::vector<int> on1, on2;
            for (int p : s.line_points[l1])
                if (p != x && int(on1.size()) < 2) on1.push_back(p);
            for (int p : s.line_points[l2])
                if (p != x && int(on2.size()) < 2) on2.push_back(p);
            if (on1.size() < 2 || on2.size() < 2) continue;
            int a = on1[0], b = on1[1], c = on2[0], d = on2[1];
            if (!collinear(a, b, c) && !collinear(a, b, d) &&
                !collinear(a, c, d) && !collinear(b, c, d))
                return; // found one
        }
    }
    out.push_back({"quadrilateral", {}, "no quadrilateral found in bounded scan"});
}

VerifyReport verify_impl(const IncidenceStructure& s, bool parallel) {
    VerifyReport rep;
    if (!well_formed(s, rep.violations)) {
        rep.pass = false;
        return rep;
    }
    check_counts(s, rep.violations);
    if (!rep.violations.empty() && s.order < 2) {
        rep.pass = false;
        return rep;
    }
    check_line_sizes(s, rep.violations);
    check_point_degrees(s, rep.violations);
    check_point_pairs(s, parallel, rep.violations);
    if (s.kind == PlaneKind::projective) {
        check_line_pairs(s, parallel, rep.violations);
        check_quadrilateral(s, rep.violations);
    } else {
        check_playfair(s, parallel, rep.violations);
    }
    if (int(rep.violations.size()) > kMaxViolations)
        rep.violations.resize(kMaxViolations);
    rep.pass = rep.violations.empty();
    return rep;
}

} // namespace

std::string VerifyReport::summary() const {
    if (pass) return "pass";
    std::string out = std::to_string(violations.size()) + " violation(s):";
    for (const auto& v : violations) {
        out += " [" + v.check;
        for (int w : v.witness) out += " " + std::to_string(w);
        out += "]";
    }
    return out;
}

VerifyReport verify_axioms(const IncidenceStructure& s) {
    return verify_impl(s, true);
}

VerifyReport verify_axioms_serial(const IncidenceStructure& s) {
    return verify_impl(s, false);
}

} // namespace blockset
