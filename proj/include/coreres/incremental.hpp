#pragma once

#include <optional>
#include <vector>

#include "coreres/core.hpp"
#include "coreres/graph.hpp"

namespace coreres {

struct EdgeChange {
    enum class Kind { insert, remove };
    Kind kind;
    node_t u, v;
};

struct CoreDelta {
    node_t node;
    int old_core;
    int new_core;

    bool operator==(const CoreDelta& o) const {
        return node == o.node && old_core == o.old_core && new_core == o.new_core;
    }
    bool operator<(const CoreDelta& o) const { return node < o.node; }
};

struct ChangeReport {
    std::vector<CoreDelta> changed;  // sorted by node id
    CoreState updated_core;
};

/// Ground truth: apply the change to a copy, run full core_decompose, diff.
ChangeReport recompute_oracle(const Graph& g, const EdgeChange& change);

/// Incremental update for removing edge (u,v) in E. Touches only the subcore
/// region of the endpoint(s) with minimum core; changed nodes decrement by 1.
ChangeReport remove_edge_update(const Graph& g, const CoreState& cs, node_t u,
                                node_t v);

/// Incremental update for inserting edge (u,v) not in E. When `subcores` is
/// supplied the candidate region is read from it instead of rebuilt by BFS.
/// Changed nodes increment by 1.
ChangeReport insert_edge_update(const Graph& g, const CoreState& cs, node_t u,
                                node_t v,
                                const SubcoreIndex* subcores = nullptr);

// Read-only evaluation paths: the core-number deltas only, with no CoreState
// rebuild. `g` is left untouched; the removed/inserted edge is handled
// virtually. These are the hot-path primitives for RSC/ISC and benchmarks.
std::vector<CoreDelta> eval_remove(const Graph& g, const CoreState& cs, node_t u,
                                   node_t v);
std::vector<CoreDelta> eval_insert(const Graph& g, const CoreState& cs, node_t u,
                                   node_t v,
                                   const SubcoreIndex* subcores = nullptr);

}  // namespace coreres
