#include "blockset/knots.hpp"

#include <algorithm>

#include "blockset/rng.hpp"

namespace blockset {

long long KnotSpectrum::total_points() const {
    long long q2q = (long long)q * q + q;
    return excluded ? q2q : q2q + 1;
}

KnotSpectrum spectrum(const IncidenceStructure& s, const LineSet& L,
                      std::optional<int> P) {
    if (s.kind != PlaneKind::projective)
        throw NotProjective("knot spectra are defined on projective planes");
    check_line_set(s, L);
    if (P && (*P < 0 || *P >= s.num_points))
        throw StructureMismatch("excluded point out of range");

    std::vector<int> degree(s.num_points, 0);
    for (int l : L.to_indices())
        for (int p : s.line_points[l]) ++degree[p];

    if (P && degree[*P] > 0)
        throw ExcludedPointCovered("a line of L passes through point " +
                                   std::to_string(*P));

    KnotSpectrum spec;
    spec.q = s.order;
    spec.line_count = L.count();
    spec.excluded = P;
    spec.x.assign(s.order + 2, 0);
    for (int p = 0; p < s.num_points; ++p) {
        if (P && p == *P) continue;
        ++spec.x[degree[p]];
    }
    spec.max_knot = 0;
    for (int i = int(spec.x.size()) - 1; i >= 1; --i)
        if (spec.x[i] > 0) { spec.max_knot = i; break; }
    return spec;
}

bool standard_counts_check(const KnotSpectrum& s) {
    long long sum = 0, sum_i = 0, sum_ii = 0;
    for (size_t i = 0; i < s.x.size(); ++i) {
        sum += s.x[i];
        sum_i += (long long)i * s.x[i];
        sum_ii += (long long)i * ((long long)i - 1) * s.x[i];
    }
    long long L = s.line_count;
    return sum == s.total_points() && sum_i == L * (s.q + 1) &&
           sum_ii == L * (L - 1);
}

BeqValue beq_evaluate(const KnotSpectrum& s, long long kbar) {
    if (!s.excluded)
        throw NotACover("the identity needs an excluded point");
    if (s.x[0] != 0)
        throw NotACover(std::to_string(s.x[0]) +
                        " point(s) other than P lie on no line of L");
    BeqValue v;
    for (size_t i = 1; i < s.x.size(); ++i)
        v.lhs += ((long long)i - 1) * (kbar - (long long)i) * s.x[i];
    long long L = s.line_count;
    long long q = s.q;
    v.rhs = -L * (L - 1) + kbar * L * (q + 1) - kbar * (q * q + q);
    return v;
}

LineProfile line_profile(const IncidenceStructure& s, const LineSet& L,
                         int line, std::optional<int> P,
                         std::span<const int> exclusions) {
    if (s.kind != PlaneKind::projective)
        throw NotProjective("line profiles are defined on projective planes");
    check_line_set(s, L);
    if (line < 0 || line >= s.num_lines)
        throw StructureMismatch("line index out of range");
    for (int e : exclusions)
        if (!s.point_on_line(e, line))
            throw StructureMismatch("exclusion " + std::to_string(e) +
                                    " is not on the profiled line");

    std::vector<int> degree(s.num_points, 0);
    for (int l : L.to_indices())
        for (int p : s.line_points[l]) ++degree[p];

    LineProfile prof;
    prof.line = line;
    prof.in_L = L.test(line);
    prof.delta = P && s.point_on_line(*P, line);
    prof.exclusions.assign(exclusions.begin(), exclusions.end());
    std::sort(prof.exclusions.begin(), prof.exclusions.end());
    prof.a.assign(s.order + 2, 0);
    for (int p : s.line_points[line]) {
        if (std::binary_search(prof.exclusions.begin(), prof.exclusions.end(),
                               p))
            continue;
        ++prof.a[degree[p]];
    }
    for (size_t j = 0; j < prof.a.size(); ++j) {
        prof.sum_a += prof.a[j];
        prof.sum_j_a += (long long)j * prof.a[j];
    }
    return prof;
}

bool AuditReport::any_violation() const {
    for (const auto& e : entries)
        if (e.applicable && e.holds && !*e.holds) return true;
    return false;
}

AuditReport hypothesis_audit(const IncidenceStructure& s, const LineSet& L,
                             int P) {
    validate_cover(s, L, P);
    KnotSpectrum spec = spectrum(s, L, P);

    const long long q = s.order;
    const long long sq = isqrt_ll(q);
    const long long size = spec.line_count;
    const long long k = spec.max_knot;

    AuditReport rep;

    auto numbers = [&](std::string extra) {
        return "q=" + std::to_string(q) + " |L|=" + std::to_string(size) +
               " k=" + std::to_string(k) + extra;
    };

    {
        AuditEntry e;
        e.claim = "max-knot-range";
        e.applicable = q >= 9 && size < 2 * q - 1;
        if (e.applicable)
            e.holds = k < q && size >= q + k && k > sq;
        e.witness = numbers("");
        rep.entries.push_back(std::move(e));
    }
    {
        AuditEntry e;
        e.claim = "knot-above-sqrt";
        e.applicable = q >= 25 && size <= q + sq + 3;
        if (e.applicable) e.holds = k > sq + 1;
        e.witness = numbers("");
        rep.entries.push_back(std::move(e));
    }
    {
        AuditEntry e;
        e.claim = "top-knot-count";
        e.applicable = q >= 25 && k == sq + 2 && size == q + sq + 2;
        if (e.applicable) e.holds = spec.x[size_t(sq + 2)] <= 5;
        e.witness = numbers(" x_k=" + std::to_string(spec.x[size_t(k)]));
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

AuditReport hypothesis_audit(const CoverConfig& c) {
    return hypothesis_audit(c.plane, c.lines, c.excluded_point);
}

CountsRunResult counts_property_run(const IncidenceStructure& s, int trials,
                                    uint64_t seed) {
    if (s.kind != PlaneKind::projective)
        throw NotProjective("counts property run needs a projective plane");

    SplitMix64 rng(seed);
    CountsRunResult res;
    auto fail = [&](const std::string& what) {
        ++res.failures;
        if (res.first_failure.empty()) res.first_failure = what;
    };

    std::vector<int> all_lines(s.num_lines);
    for (int l = 0; l < s.num_lines; ++l) all_lines[l] = l;

    for (int t = 0; t < trials; ++t) {
        // arbitrary L of random size via a partial shuffle
        int size = int(rng.below(s.num_lines + 1));
        std::vector<int> pool = all_lines;
        for (int i = 0; i < size; ++i) {
            int j = i + int(rng.below(pool.size() - i));
            std::swap(pool[i], pool[j]);
        }
        LineSet L = LineSet::from_indices(
            s.num_lines, std::span<const int>(pool.data(), size));
        ++res.arbitrary_checked;
        if (!standard_counts_check(spectrum(s, L)))
            fail("standard countings fail for a random line set of size " +
                 std::to_string(size));
    }

    for (int t = 0; t < trials; ++t) {
        // random cover: all lines avoiding P, thinned in random order while
        // coverage survives
        int P = int(rng.below(s.num_points));
        std::vector<int> cands;
        for (int l = 0; l < s.num_lines; ++l)
            if (!s.point_on_line(P, l)) cands.push_back(l);
        for (size_t i = 0; i + 1 < cands.size(); ++i) {
            size_t j = i + rng.below(cands.size() - i);
            std::swap(cands[i], cands[j]);
        }
        std::vector<int> times(s.num_points, 0);
        for (int l : cands)
            for (int p : s.line_points[l]) ++times[p];
        LineSet L(s.num_lines);
        for (int l : cands) L.set(l);
        for (int l : cands) {
            bool removable = true;
            for (int p : s.line_points[l])
                if (times[p] < 2) { removable = false; break; }
            if (removable) {
                L.reset(l);
                for (int p : s.line_points[l]) --times[p];
            }
        }

        ++res.covers_checked;
        KnotSpectrum spec = spectrum(s, L, P);
        if (spec.x[0] != 0) {
            fail("random cover construction left a point uncovered");
            continue;
        }
        if (!standard_counts_check(spec)) {
            fail("standard countings fail for a random cover");
            continue;
        }
        for (long long kbar = 0; kbar <= s.order + 2; ++kbar) {
            BeqValue v = beq_evaluate(spec, kbar);
            if (v.lhs != v.rhs) {
                fail("cross-identity fails at kbar=" + std::to_string(kbar));
                break;
            }
        }
        AuditReport audit = hypothesis_audit(s, L, P);
        if (audit.any_violation())
            fail("hypothesis audit reported a conclusion violation");
    }
    return res;
}

} // namespace blockset
