#pragma once

#include <vector>

#include "coreres/core.hpp"
#include "coreres/digraph.hpp"
#include "coreres/graph.hpp"
#include "coreres/incremental.hpp"

namespace coreres {

/// Core Strength: CS(u) = |geq-neighbors(u)| - K(u) + 1. The prior measure
/// this library's removal strengths replace; kept as a baseline.
std::vector<int> core_strength(const Graph& g, const CoreState& cs);

/// A node is vulnerable iff K(u) equals its count of neighbors with core
/// number >= K(u). Its sensitive edges go to exactly those neighbors.
struct Vulnerability {
    std::vector<bool> vulnerable;
    // sensitive partner v per sensitive edge (u,v); empty for non-vulnerable u
    std::vector<std::vector<node_t>> sensitive_partners;
};

Vulnerability find_vulnerable_and_sensitive(const Graph& g, const CoreState& cs);

/// k-corona: maximal connected set of vulnerable nodes sharing core number k.
/// KAES is the union of the members' sensitive edges; CCN the nodes whose core
/// numbers change when any one KAES edge is removed (one representative
/// removal decides it for the whole set).
struct Corona {
    int k;
    std::vector<node_t> members;  // sorted
    std::vector<Edge> kaes;       // sorted
    std::vector<node_t> ccn;      // sorted
};

struct CoronaSet {
    std::vector<Corona> coronas;
    std::vector<int> corona_of_node;  // -1 for non-vulnerable nodes

    bool in_ccn(int corona_id, node_t u) const;
    /// Corona whose KAES contains edge (u,v), or -1 if the edge is in none.
    int corona_of_edge(const CoreState& cs, const Vulnerability& vul, node_t u,
                       node_t v) const;
};

struct CoronaStats {
    std::size_t eval_calls = 0;  // representative removals performed
};

CoronaSet find_k_coronas(const Graph& g, const CoreState& cs,
                         CoronaStats* stats = nullptr);

/// RSC: assemble the removal dependency graph from coronas and the per-case
/// rules; edge (u,v) present means removing (u,v) from G decrements K(v).
Digraph build_removal_dependency_graph(const Graph& g, const CoreState& cs,
                                       const CoronaSet& coronas);

/// Naive construction: one incremental evaluation per graph edge. Ground
/// truth for RSC and the benchmark baseline.
Digraph build_removal_dependency_graph_naive(const Graph& g, const CoreState& cs);

struct RemovalStrengths {
    std::vector<double> rs_id;  // 1/indeg; +infinity when indeg = 0
    std::vector<int> rs_od;     // outdeg
};

RemovalStrengths removal_strengths(const Digraph& rd);

/// Witness that fewer than CS(u) edge removals already dropped K(u).
struct CsWitness {
    node_t node;
    int cs_value;
    std::vector<Edge> removed;  // |removed| < cs_value
    int new_core;
};

/// Enumerate removals of up to max_remove incident edges (full-recompute
/// oracle per subset) for nodes with CS >= 2, by default restricted to the
/// maximum k-core as in the falsification experiment. First witness per node.
std::vector<CsWitness> cs_falsification_scan(const Graph& g, const CoreState& cs,
                                             int max_remove,
                                             bool max_core_only = true);

}  // namespace coreres
