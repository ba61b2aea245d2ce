#pragma once

#include <vector>

#include "coreres/graph.hpp"

namespace coreres {

/// Core numbers plus the derived indices the rest of the system reads:
/// k-shells (nodes per core value) and subcores (connected components of
/// equal-core nodes). Immutable once built.
struct CoreState {
    std::vector<int> core;                     // K(u)
    int max_core = 0;
    std::vector<std::vector<node_t>> shells;   // shells[k] = nodes with K(u)=k
    std::vector<int> subcore_id;               // component id of u's subcore

    bool operator==(const CoreState& o) const {
        return core == o.core && subcore_id == o.subcore_id;
    }
};

/// Bucket-peeling core decomposition, O(|E|). Handles disconnected graphs;
/// isolated nodes get core 0.
CoreState core_decompose(const Graph& g);

/// Rebuild shells and subcore ids from an already-known core vector without
/// peeling. Used after incremental updates.
CoreState core_state_from_cores(const Graph& g, std::vector<int> cores);

/// Subcore member lists, indexed by subcore id. The precomputable candidate
/// regions for edge-insertion updates.
struct SubcoreIndex {
    std::vector<std::vector<node_t>> members;
};

SubcoreIndex build_subcore_index(const Graph& g, const CoreState& cs);

/// h-index of a list of values: the largest h such that at least h entries
/// are >= h.
int h_index(std::vector<int> values);

/// Self-test: true iff K(u) equals the h-index of the neighbors' core numbers
/// for every node.
bool h_index_check(const Graph& g, const CoreState& cs);

/// Per-node split of the neighborhood by relative core number.
struct DeltaPartition {
    std::vector<int> lt, eq, gt;                       // counts
    std::vector<std::vector<node_t>> lt_members, eq_members, gt_members;

    int geq(node_t u) const { return eq[u] + gt[u]; }
    std::vector<node_t> geq_members(node_t u) const;
};

DeltaPartition delta_partition(const Graph& g, const CoreState& cs);

}  // namespace coreres
