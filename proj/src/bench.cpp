#include "coreres/bench.hpp"

#include <chrono>

#include "coreres/insertion.hpp"
#include "coreres/removal.hpp"

namespace coreres {

namespace {

template <typename F>
double best_of(int reps, F&& fn) {
    double best = 0.0;
    for (int i = 0; i < reps; ++i) {
        auto t0 = std::chrono::steady_clock::now();
        fn();
        auto t1 = std::chrono::steady_clock::now();
        double s = std::chrono::duration<double>(t1 - t0).count();
        if (i == 0 || s < best) best = s;
    }
    return best;
}

}  // namespace

RemovalBench benchmark_removal(const Graph& g, const CoreState& cs, int reps) {
    RemovalBench r;
    r.edges = g.edge_count();

    Digraph naive, rsc;
    r.naive_seconds = best_of(
        reps, [&] { naive = build_removal_dependency_graph_naive(g, cs); });
    r.rsc_seconds = best_of(reps, [&] {
        CoronaStats stats;
        CoronaSet coronas = find_k_coronas(g, cs, &stats);
        r.coronas = coronas.coronas.size();
        rsc = build_removal_dependency_graph(g, cs, coronas);
    });

    r.gain_pct = r.edges
                     ? 100.0 * (1.0 - static_cast<double>(r.coronas) /
                                          static_cast<double>(r.edges))
                     : 0.0;
    r.speedup = r.rsc_seconds > 0.0 ? r.naive_seconds / r.rsc_seconds : 0.0;
    r.graphs_match = naive.same_edges(rsc);
    return r;
}

InsertionBench benchmark_insertion(const Graph& g, const CoreState& cs, int b,
                                   std::uint64_t seed, int reps) {
    InsertionBench r;
    InsertionCandidateGraph ic = build_candidate_graph(g, cs, b, seed);
    r.candidates = ic.edges.size();
    SubcoreIndex idx = build_subcore_index(g, cs);

    // the subcore index is precomputed once and shared, so the timed passes
    // differ only in how each candidate edge is resolved
    InsertionDependencyGraph naive, isc;
    r.naive_seconds = best_of(reps, [&] {
        naive = build_insertion_dependency_graph_naive(g, cs, ic, &idx);
    });
    r.isc_seconds = best_of(
        reps, [&] { isc = build_insertion_dependency_graph(g, cs, ic, &idx); });

    r.rule_resolved = isc.stats.higher_core_fill + isc.stats.equal_core_pair + isc.stats.neighbor_assist;
    r.fallbacks = isc.stats.fallback;
    r.speedup = r.isc_seconds > 0.0 ? r.naive_seconds / r.isc_seconds : 0.0;
    r.graphs_match = naive.dg.same_edges(isc.dg);
    return r;
}

}  // namespace coreres
