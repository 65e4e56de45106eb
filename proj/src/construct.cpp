#include "blockset/construct.hpp"

#include <algorithm>
#include <array>

namespace blockset {

namespace {

constexpr long kMaxStructureSize = 1000000;

using Triple = std::array<long, 3>;

Triple normalize(const FiniteField& F, Triple t) {
    for (int i = 0; i < 3; ++i) {
        if (t[i] != 0) {
            long s = F.inv(t[i]);
            for (int j = 0; j < 3; ++j) t[j] = F.mul(t[j], s);
            return t;
        }
    }
    return t;
}

// Lex rank of a normalized triple: (0,0,1) first, then (0,1,t), then (1,s,t).
int triple_index(long q, const Triple& t) {
    if (t[0] == 1) return int(1 + q + t[1] * q + t[2]);
    if (t[1] == 1) return int(1 + t[2]);
    return 0;
}

} // namespace

int projective_triple_index(const FiniteField& F, long x0, long x1, long x2) {
    Triple t = normalize(F, {x0, x1, x2});
    return triple_index(F.order(), t);
}

IncidenceStructure build_desarguesian_projective(const FiniteField& F) {
    const long q = F.order();
    const long n = q * q + q + 1;
    if (n > kMaxStructureSize)
        throw SizeOutOfRange("projective plane of order " + std::to_string(q) +
                             " exceeds the size cap");

    IncidenceStructure s;
    s.kind = PlaneKind::projective;
    s.order = int(q);
    s.num_points = int(n);
    s.num_lines = int(n);
    s.provenance = "pg";
    s.line_points.assign(n, {});

    // Enumerate each line's q+1 points from a kernel basis of its
    // coefficient functional instead of testing all point/line pairs.
    auto line_coeffs = [&](int index) -> Triple {
        if (index == 0) return {0, 0, 1};
        if (index <= q) return {0, 1, index - 1};
        long rest = index - 1 - q;
        return {1, rest / q, rest % q};
    };

    for (int l = 0; l < n; ++l) {
        Triple c = line_coeffs(l);
        Triple u, v;
        if (c[0] != 0) {
            long ia = F.inv(c[0]);
            u = {F.neg(F.mul(c[1], ia)), 1, 0};
            v = {F.neg(F.mul(c[2], ia)), 0, 1};
        } else if (c[1] != 0) {
            long ib = F.inv(c[1]);
            u = {1, 0, 0};
            v = {0, F.neg(F.mul(c[2], ib)), 1};
        } else {
            u = {1, 0, 0};
            v = {0, 1, 0};
        }
        auto& pts = s.line_points[l];
        pts.reserve(q + 1);
        pts.push_back(triple_index(q, normalize(F, v)));
        for (long t = 0; t < q; ++t) {
            Triple w = {F.add(u[0], F.mul(t, v[0])),
                        F.add(u[1], F.mul(t, v[1])),
                        F.add(u[2], F.mul(t, v[2]))};
            pts.push_back(triple_index(q, normalize(F, w)));
        }
        std::sort(pts.begin(), pts.end());
    }
    s.derive_point_lines();
    return s;
}

IncidenceStructure build_desarguesian_affine(const FiniteField& F) {
    const long q = F.order();
    if (q * q > kMaxStructureSize)
        throw SizeOutOfRange("affine plane of order " + std::to_string(q) +
                             " exceeds the size cap");

    IncidenceStructure s;
    s.kind = PlaneKind::affine;
    s.order = int(q);
    s.num_points = int(q * q);
    s.num_lines = int(q * q + q);
    s.provenance = "ag";
    s.line_points.assign(s.num_lines, {});

    for (long m = 0; m < q; ++m) {
        for (long c = 0; c < q; ++c) {
            auto& pts = s.line_points[m * q + c];
            pts.reserve(q);
            for (long x = 0; x < q; ++x)
                pts.push_back(int(x * q + F.add(F.mul(m, x), c)));
            std::sort(pts.begin(), pts.end());
        }
    }
    for (long c = 0; c < q; ++c) {
        auto& pts = s.line_points[q * q + c];
        pts.reserve(q);
        for (long y = 0; y < q; ++y) pts.push_back(int(c * q + y));
    }
    s.derive_point_lines();
    return s;
}

IncidenceStructure build_translation_plane(const Quasifield& qf) {
    const long n = qf.order();
    if (n > 64)
        throw SizeOutOfRange("translation plane order cap is 64");
    std::string fail = qf.check_axioms();
    if (!fail.empty())
        throw InvalidQuasifield("quasifield axioms fail: " + fail);

    IncidenceStructure s;
    s.kind = PlaneKind::affine;
    s.order = int(n);
    s.num_points = int(n * n);
    s.num_lines = int(n * n + n);
    s.provenance = qf.family() == "hall" ? "hall" : "translation";
    s.line_points.assign(s.num_lines, {});

    for (long m = 0; m < n; ++m) {
        for (long k = 0; k < n; ++k) {
            auto& pts = s.line_points[m * n + k];
            pts.reserve(n);
            for (long x = 0; x < n; ++x)
                pts.push_back(int(x * n + qf.add(qf.mul(x, m), k)));
            std::sort(pts.begin(), pts.end());
        }
    }
    for (long c = 0; c < n; ++c) {
        auto& pts = s.line_points[n * n + c];
        pts.reserve(n);
        for (long y = 0; y < n; ++y) pts.push_back(int(c * n + y));
    }
    s.derive_point_lines();
    return s;
}

} // namespace blockset
