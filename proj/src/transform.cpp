#include "blockset/transform.hpp"

#include <algorithm>

#include "blockset/verify.hpp"

namespace blockset {

namespace {

// Parallel classes of an affine plane: lines are parallel iff equal or
// disjoint. Classes come out ordered by their least line index.
std::vector<std::vector<int>> parallel_classes(const IncidenceStructure& s) {
    std::vector<int> class_of(s.num_lines, -1);
    std::vector<std::vector<int>> classes;
    for (int l = 0; l < s.num_lines; ++l) {
        if (class_of[l] >= 0) continue;
        int c = int(classes.size());
        classes.push_back({l});
        class_of[l] = c;
        for (int g = l + 1; g < s.num_lines; ++g)
            if (class_of[g] < 0 && s.line_intersection_size(l, g) == 0) {
                class_of[g] = c;
                classes[c].push_back(g);
            }
    }
    return classes;
}

} // namespace

Completion complete(const IncidenceStructure& affine) {
    if (affine.kind != PlaneKind::affine)
        throw NotAffine("completion requires an affine plane");
    VerifyReport rep = verify_axioms(affine);
    if (!rep.pass)
        throw NotAffine("affine axioms fail: " + rep.summary());

    const int q = affine.order;
    auto classes = parallel_classes(affine);

    Completion out;
    IncidenceStructure& s = out.plane;
    s.kind = PlaneKind::projective;
    s.order = q;
    s.num_points = affine.num_points + q + 1;
    s.num_lines = affine.num_lines + 1;
    s.provenance = affine.provenance;
    s.line_points = affine.line_points;
    s.line_points.resize(s.num_lines);

    for (int c = 0; c < int(classes.size()); ++c) {
        int ideal = affine.num_points + c;
        for (int l : classes[c]) s.line_points[l].push_back(ideal);
        s.line_points[affine.num_lines].push_back(ideal);
    }
    out.infinity_line = affine.num_lines;
    s.derive_point_lines();
    return out;
}

IncidenceStructure restrict_plane(const IncidenceStructure& projective,
                                  int line) {
    if (projective.kind != PlaneKind::projective)
        throw NotProjective("restriction requires a projective plane");
    if (line < 0 || line >= projective.num_lines)
        throw NotProjective("line index out of range");
    VerifyReport rep = verify_axioms(projective);
    if (!rep.pass)
        throw NotProjective("projective axioms fail: " + rep.summary());

    const auto& removed = projective.line_points[line];
    std::vector<int> new_point(projective.num_points, -1);
    int next = 0;
    for (int p = 0; p < projective.num_points; ++p)
        if (!std::binary_search(removed.begin(), removed.end(), p))
            new_point[p] = next++;

    IncidenceStructure s;
    s.kind = PlaneKind::affine;
    s.order = projective.order;
    s.num_points = next;
    s.num_lines = projective.num_lines - 1;
    s.provenance = projective.provenance;
    s.line_points.reserve(s.num_lines);
    for (int l = 0; l < projective.num_lines; ++l) {
        if (l == line) continue;
        std::vector<int> pts;
        pts.reserve(projective.order);
        for (int p : projective.line_points[l])
            if (new_point[p] >= 0) pts.push_back(new_point[p]);
        s.line_points.push_back(std::move(pts));
    }
    s.derive_point_lines();
    return s;
}

IncidenceStructure dualize(const IncidenceStructure& projective) {
    if (projective.kind != PlaneKind::projective)
        throw NotProjective("dualization requires a projective plane");
    VerifyReport rep = verify_axioms(projective);
    if (!rep.pass)
        throw NotProjective("projective axioms fail: " + rep.summary());

    IncidenceStructure s;
    s.kind = PlaneKind::projective;
    s.order = projective.order;
    s.num_points = projective.num_lines;
    s.num_lines = projective.num_points;
    s.provenance = projective.provenance;
    s.line_points = projective.point_lines;
    s.derive_point_lines();
    return s;
}

} // namespace blockset
