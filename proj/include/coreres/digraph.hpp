#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "coreres/types.hpp"

namespace coreres {

/// Directed graph over the same node ids as an undirected Graph. Used for the
/// removal and insertion dependency graphs.
struct Digraph {
    std::vector<std::vector<node_t>> out;
    std::vector<int> indeg;

    Digraph() = default;
    explicit Digraph(std::size_t n) : out(n), indeg(n, 0) {}

    std::size_t node_count() const { return out.size(); }

    void add_edge(node_t from, node_t to) {
        out[from].push_back(to);
        ++indeg[to];
    }

    int out_degree(node_t u) const { return static_cast<int>(out[u].size()); }
    int in_degree(node_t u) const { return indeg[u]; }

    std::size_t edge_count() const {
        std::size_t m = 0;
        for (const auto& o : out) m += o.size();
        return m;
    }

    /// Canonical sorted (from,to) list, for comparison and export.
    std::vector<std::pair<node_t, node_t>> edges_sorted() const {
        std::vector<std::pair<node_t, node_t>> es;
        es.reserve(edge_count());
        for (node_t u = 0; u < static_cast<node_t>(out.size()); ++u)
            for (node_t v : out[u]) es.emplace_back(u, v);
        std::sort(es.begin(), es.end());
        return es;
    }

    bool same_edges(const Digraph& o) const {
        return edges_sorted() == o.edges_sorted();
    }
};

}  // namespace coreres
