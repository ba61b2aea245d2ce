#pragma once

#include <cstdint>
#include <cstddef>

#include "coreres/core.hpp"
#include "coreres/graph.hpp"

namespace coreres {

/// Removal: the naive pass evaluates one incremental removal per graph edge;
/// RSC evaluates one per k-corona and fills the rest in by the case rules.
/// Timings are the best of `reps` repetitions of each full pass.
struct RemovalBench {
    std::size_t edges = 0;
    std::size_t coronas = 0;
    double gain_pct = 0.0;       // 100 * (1 - coronas/|E|)
    double naive_seconds = 0.0;
    double rsc_seconds = 0.0;
    double speedup = 0.0;
    bool graphs_match = false;   // RSC output equals the naive one
};

RemovalBench benchmark_removal(const Graph& g, const CoreState& cs, int reps = 3);

/// Insertion: both passes walk the same candidate graph with the same
/// precomputed subcore index; ISC resolves what it can by the shortcut rules and
/// simulates only the fallbacks, the naive pass simulates every edge.
struct InsertionBench {
    std::size_t candidates = 0;
    std::size_t rule_resolved = 0;
    std::size_t fallbacks = 0;
    double naive_seconds = 0.0;
    double isc_seconds = 0.0;
    double speedup = 0.0;
    bool graphs_match = false;
};

InsertionBench benchmark_insertion(const Graph& g, const CoreState& cs, int b,
                                   std::uint64_t seed, int reps = 3);

}  // namespace coreres
