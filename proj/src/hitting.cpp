#include "blockset/hitting.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>

#include "blockset/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace blockset {

namespace {

using Words = std::vector<uint64_t>;

struct Context {
    const HittingInstance* inst;
    int num_sets;
    std::vector<std::vector<int>> elem_sets; // element -> sets containing it
    std::vector<Words> set_bits;             // set -> element bitmask
    size_t elem_words;

    std::atomic<int> best;
    std::vector<int> best_witness;
    std::mutex best_mutex;
    bool lex_ties; // prefer lexicographically least witness among equals

    std::atomic<long long> nodes{0};
    long long budget;
    std::atomic<bool> out_of_budget{false};
};

struct State {
    std::vector<char> hit;   // per set
    int unhit;
    Words excluded;          // per element
    std::vector<int> chosen;
};

bool words_intersect(const Words& a, const Words& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] & b[i]) return true;
    return false;
}

void words_or(Words& a, const Words& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] |= b[i];
}

bool excluded_test(const Words& w, int e) {
    return (w[e >> 6] >> (e & 63)) & 1u;
}

void report_solution(Context& ctx, const std::vector<int>& chosen) {
    std::vector<int> sorted = chosen;
    std::sort(sorted.begin(), sorted.end());
    std::lock_guard<std::mutex> lock(ctx.best_mutex);
    int cur = ctx.best.load(std::memory_order_relaxed);
    int val = int(sorted.size());
    if (val < cur ||
        (val == cur && ctx.lex_ties &&
         std::lexicographical_compare(sorted.begin(), sorted.end(),
                                      ctx.best_witness.begin(),
                                      ctx.best_witness.end()))) {
        ctx.best.store(val, std::memory_order_relaxed);
        ctx.best_witness = std::move(sorted);
    }
}

// |chosen| + size of a greedy disjoint family of unhit sets.
int lower_bound(const Context& ctx, const State& st) {
    Words covered(ctx.elem_words, 0);
    int packed = 0;
    for (int s = 0; s < ctx.num_sets; ++s) {
        if (st.hit[s]) continue;
        if (!words_intersect(covered, ctx.set_bits[s])) {
            words_or(covered, ctx.set_bits[s]);
            ++packed;
        }
    }
    return int(st.chosen.size()) + packed;
}

void search(Context& ctx, State& st, int depth, bool parallel) {
    if (ctx.out_of_budget.load(std::memory_order_relaxed)) return;
    long long n = ctx.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (n > ctx.budget) {
        ctx.nodes.fetch_sub(1, std::memory_order_relaxed);
        ctx.out_of_budget.store(true, std::memory_order_relaxed);
        return;
    }

    if (st.unhit == 0) {
        report_solution(ctx, st.chosen);
        return;
    }
    if (lower_bound(ctx, st) >= ctx.best.load(std::memory_order_relaxed))
        return;

    // unhit set with fewest remaining elements, ties by least index
    int pick = -1, pick_rem = std::numeric_limits<int>::max();
    for (int s = 0; s < ctx.num_sets; ++s) {
        if (st.hit[s]) continue;
        int rem = 0;
        for (int e : ctx.inst->sets[s])
            if (!excluded_test(st.excluded, e)) ++rem;
        if (rem < pick_rem) {
            pick_rem = rem;
            pick = s;
            if (rem == 0) break;
        }
    }
    if (pick_rem == 0) return; // some set cannot be hit any more

    std::vector<int> candidates;
    candidates.reserve(pick_rem);
    for (int e : ctx.inst->sets[pick])
        if (!excluded_test(st.excluded, e)) candidates.push_back(e);

    for (size_t i = 0; i < candidates.size(); ++i) {
        int e = candidates[i];
        State child;
        child.hit = st.hit;
        child.unhit = st.unhit;
        child.excluded = st.excluded;
        child.chosen = st.chosen;
        // earlier candidates were already tried; exclude them below here
        for (size_t j = 0; j < i; ++j) {
            int prev = candidates[j];
            child.excluded[prev >> 6] |= uint64_t(1) << (prev & 63);
        }
        child.chosen.push_back(e);
        for (int s : ctx.elem_sets[e])
            if (!child.hit[s]) {
                child.hit[s] = 1;
                --child.unhit;
            }
#ifdef _OPENMP
        if (parallel && depth < 3) {
#pragma omp task firstprivate(child) shared(ctx)
            search(ctx, child, depth + 1, true);
            continue;
        }
#endif
        search(ctx, child, depth + 1, parallel);
    }
}

} // namespace

int disjoint_packing_bound(const HittingInstance& inst,
                           const std::vector<char>& hit) {
    size_t words = (inst.universe + 63) / 64;
    Words covered(words, 0);
    int packed = 0;
    for (int s = 0; s < int(inst.sets.size()); ++s) {
        if (s < int(hit.size()) && hit[s]) continue;
        bool disjoint = true;
        for (int e : inst.sets[s])
            if ((covered[e >> 6] >> (e & 63)) & 1u) { disjoint = false; break; }
        if (disjoint) {
            for (int e : inst.sets[s]) covered[e >> 6] |= uint64_t(1) << (e & 63);
            ++packed;
        }
    }
    return packed;
}

std::vector<int> greedy_hitting(const HittingInstance& inst) {
    for (const auto& s : inst.sets)
        if (s.empty()) throw Error("hitting instance contains an empty set");

    std::vector<std::vector<int>> elem_sets(inst.universe);
    for (int s = 0; s < int(inst.sets.size()); ++s)
        for (int e : inst.sets[s]) elem_sets[e].push_back(s);

    std::vector<char> hit(inst.sets.size(), 0);
    int unhit = int(inst.sets.size());
    std::vector<int> chosen;
    while (unhit > 0) {
        int best_e = -1, best_gain = 0;
        for (int e = 0; e < inst.universe; ++e) {
            int gain = 0;
            for (int s : elem_sets[e])
                if (!hit[s]) ++gain;
            if (gain > best_gain) {
                best_gain = gain;
                best_e = e;
            }
        }
        chosen.push_back(best_e);
        for (int s : elem_sets[best_e])
            if (!hit[s]) {
                hit[s] = 1;
                --unhit;
            }
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

HittingResult solve_min_hitting(const HittingInstance& inst,
                                const SearchOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();

    Context ctx;
    ctx.inst = &inst;
    ctx.num_sets = int(inst.sets.size());
    ctx.elem_words = (inst.universe + 63) / 64;
    ctx.elem_sets.assign(inst.universe, {});
    for (int s = 0; s < ctx.num_sets; ++s)
        for (int e : inst.sets[s]) ctx.elem_sets[e].push_back(s);
    ctx.set_bits.assign(ctx.num_sets, Words(ctx.elem_words, 0));
    for (int s = 0; s < ctx.num_sets; ++s)
        for (int e : inst.sets[s])
            ctx.set_bits[s][e >> 6] |= uint64_t(1) << (e & 63);

    std::vector<int> greedy = greedy_hitting(inst);
    ctx.best.store(int(greedy.size()));
    ctx.best_witness = greedy;
    ctx.lex_ties = opts.deterministic;
    ctx.budget = std::max<long long>(opts.node_budget, 0);

    State root;
    root.hit.assign(ctx.num_sets, 0);
    root.unhit = ctx.num_sets;
    root.excluded.assign(ctx.elem_words, 0);

    bool parallel = !opts.deterministic && opts.threads != 1;
#ifdef _OPENMP
    if (parallel) {
        if (opts.threads > 1) omp_set_num_threads(opts.threads);
#pragma omp parallel
        {
#pragma omp single nowait
            search(ctx, root, 0, true);
        }
    } else {
        search(ctx, root, 0, false);
    }
#else
    search(ctx, root, 0, false);
#endif

    HittingResult res;
    res.witness = ctx.best_witness;
    res.value = ctx.best.load();
    res.proved_optimal = !ctx.out_of_budget.load();
    res.nodes = ctx.nodes.load();
    res.ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                 std::chrono::steady_clock::now() - t0)
                 .count();
    return res;
}

} // namespace blockset
