#pragma once

#include <cstdint>
#include <vector>

#include "coreres/core.hpp"
#include "coreres/digraph.hpp"
#include "coreres/graph.hpp"

namespace coreres {

enum class CandidateOrigin { distance2, random_fill };

struct CandidateEdge {
    node_t u, v;  // normalized u < v
    CandidateOrigin origin;
};

/// Candidate non-edges considered for insertion: per node, b partners drawn
/// from the distance-2 neighborhood, topped up with random non-neighbors when
/// the distance-2 pool is smaller than b.
struct InsertionCandidateGraph {
    std::vector<CandidateEdge> edges;  // deduplicated, generation order
    int b = 0;
    std::uint64_t seed = 0;
    std::size_t shortfall_nodes = 0;  // nodes left with fewer than b picks

    std::vector<Edge> edge_set() const;
};

/// Build the candidate graph. Deterministic for a fixed (graph, b, seed).
/// b >= node_count is a param_error.
InsertionCandidateGraph build_candidate_graph(const Graph& g, const CoreState& cs,
                                              int b, std::uint64_t seed);

enum class IscRule { higher_core_fill, equal_core_pair, neighbor_assist, fallback };

/// Outcome of the shortcut dispatch for one candidate edge, endpoints ordered
/// so K(lo) <= K(hi). For the shortcut rules the increments are implied without
/// simulation; fallback defers to the incremental update.
struct IscClassification {
    IscRule rule;
    node_t lo, hi;
    bool lo_increments = false;
    bool hi_increments = false;
    node_t co_incremented = -1;  // neighbor_assist's neighbor w, else -1
};

IscClassification isc_classify(const Graph& g, const CoreState& cs, node_t u,
                               node_t v);

struct IscStats {
    std::size_t higher_core_fill = 0, equal_core_pair = 0, neighbor_assist = 0, fallback = 0;

    std::size_t total() const { return higher_core_fill + equal_core_pair + neighbor_assist + fallback; }
    double fallback_rate() const {
        return total() ? static_cast<double>(fallback) / total() : 0.0;
    }
};

struct InsertionDependencyGraph {
    Digraph dg;  // edge (u,v): inserting candidate (u,v) increments K(v)
    IscStats stats;
};

/// ISC: classify every candidate edge against precomputed higher-core counts
/// and simulate only the fallbacks. A subcore index built once can be shared
/// across calls; without one the fallbacks locate their regions by BFS.
InsertionDependencyGraph build_insertion_dependency_graph(
    const Graph& g, const CoreState& cs, const InsertionCandidateGraph& ic,
    const SubcoreIndex* subcores = nullptr);

/// Naive construction: one incremental evaluation per candidate edge.
InsertionDependencyGraph build_insertion_dependency_graph_naive(
    const Graph& g, const CoreState& cs, const InsertionCandidateGraph& ic,
    const SubcoreIndex* subcores = nullptr);

/// Per-node insertion strengths averaged over independently sampled candidate
/// graphs (trial t uses seed ^ t). Infinity marks nodes no candidate edge can
/// lift; any infinite trial makes the mean infinite.
struct InsertionStrengths {
    std::vector<double> is_id, is_od;            // means over trials
    std::vector<double> is_id_star, is_od_star;  // neighbor-sum variants
    std::vector<double> stddev_is_id;            // population stddev per node
    std::vector<std::vector<double>> per_trial_is_id;
    std::vector<std::vector<double>> per_trial_is_od;
    int b = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    IscStats stats;  // aggregated over trials
};

InsertionStrengths insertion_strengths(const Graph& g, const CoreState& cs, int b,
                                       int trials, std::uint64_t seed);

}  // namespace coreres
