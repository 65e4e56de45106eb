#include <algorithm>

#include "blockset/rng.hpp"
#include "blockset/verify.hpp"

namespace blockset {

namespace {

bool collinear(const IncidenceStructure& s, int a, int b, int c) {
    if (a == b || a == c || b == c) return true;
    auto l = s.common_line(a, b);
    return l && s.point_on_line(c, *l);
}

// Unique meeting point of two distinct lines.
std::optional<int> meet(const IncidenceStructure& s, int l1, int l2) {
    const auto& a = s.line_points[l1];
    const auto& b = s.line_points[l2];
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (a[i] > b[j]) ++j;
        else return a[i];
    }
    return std::nullopt;
}

} // namespace

std::optional<DesarguesWitness>
desargues_violation(const IncidenceStructure& s, long budget, uint64_t seed) {
    if (s.kind != PlaneKind::projective)
        throw NotProjective("desargues search requires a projective plane");
    SplitMix64 rng(seed);
    const int n = s.num_points;

    for (long trial = 0; trial < budget; ++trial) {
        int center = int(rng.below(n));
        const auto& pencil = s.point_lines[center];
        if (pencil.size() < 3) continue;

        int g[3];
        g[0] = pencil[rng.below(pencil.size())];
        do g[1] = pencil[rng.below(pencil.size())]; while (g[1] == g[0]);
        do g[2] = pencil[rng.below(pencil.size())];
        while (g[2] == g[0] || g[2] == g[1]);

        std::array<int, 3> a{}, b{};
        bool ok = true;
        for (int i = 0; i < 3 && ok; ++i) {
            const auto& pts = s.line_points[g[i]];
            if (pts.size() < 3) { ok = false; break; }
            do a[i] = pts[rng.below(pts.size())]; while (a[i] == center);
            do b[i] = pts[rng.below(pts.size())];
            while (b[i] == center || b[i] == a[i]);
        }
        if (!ok) continue;

        if (collinear(s, a[0], a[1], a[2])) continue;
        if (collinear(s, b[0], b[1], b[2])) continue;

        std::array<int, 3> axis{};
        int k = 0;
        ok = true;
        for (int i = 0; i < 3 && ok; ++i) {
            for (int j = i + 1; j < 3 && ok; ++j) {
                auto la = s.common_line(a[i], a[j]);
                auto lb = s.common_line(b[i], b[j]);
                if (!la || !lb || *la == *lb) { ok = false; break; }
                auto p = meet(s, *la, *lb);
                if (!p) { ok = false; break; }
                axis[k++] = *p;
            }
        }
        if (!ok) continue;

        if (!collinear(s, axis[0], axis[1], axis[2]))
            return DesarguesWitness{center, a, b, axis};
    }
    return std::nullopt;
}

bool recheck_desargues_witness(const IncidenceStructure& s,
                               const DesarguesWitness& w) {
    auto valid = [&](int p) { return 0 <= p && p < s.num_points; };
    if (!valid(w.center)) return false;
    for (int i = 0; i < 3; ++i)
        if (!valid(w.a[i]) || !valid(w.b[i])) return false;

    // perspective from the center along three distinct lines
    std::array<int, 3> g{};
    for (int i = 0; i < 3; ++i) {
        if (w.a[i] == w.center || w.b[i] == w.center || w.a[i] == w.b[i])
            return false;
        auto l = s.common_line(w.a[i], w.b[i]);
        if (!l || !s.point_on_line(w.center, *l)) return false;
        g[i] = *l;
    }
    if (g[0] == g[1] || g[0] == g[2] || g[1] == g[2]) return false;

    // both triangles nondegenerate
    if (collinear(s, w.a[0], w.a[1], w.a[2])) return false;
    if (collinear(s, w.b[0], w.b[1], w.b[2])) return false;

    // the listed axis points really are the pairwise side intersections
    int k = 0;
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            auto la = s.common_line(w.a[i], w.a[j]);
            auto lb = s.common_line(w.b[i], w.b[j]);
            if (!la || !lb || *la == *lb) return false;
            if (!s.point_on_line(w.axis[k], *la) ||
                !s.point_on_line(w.axis[k], *lb))
                return false;
            ++k;
        }
    }
    return !collinear(s, w.axis[0], w.axis[1], w.axis[2]);
}

} // namespace blockset
