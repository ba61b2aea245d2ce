#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "coreres/types.hpp"

namespace coreres {

/// Undirected simple graph over dense node ids 0..n-1.
/// Adjacency lists are kept sorted; original input labels live in `labels`.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n) : adj_(n), labels_(n) {
        for (std::size_t i = 0; i < n; ++i) labels_[i] = static_cast<long long>(i);
    }

    std::size_t node_count() const { return adj_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    const std::vector<node_t>& neighbors(node_t u) const { return adj_[u]; }
    std::size_t degree(node_t u) const { return adj_[u].size(); }

    bool valid_node(node_t u) const {
        return u >= 0 && static_cast<std::size_t>(u) < adj_.size();
    }
    bool has_edge(node_t u, node_t v) const;

    // Mutators keep adjacency sorted. add_edge on an existing edge or a
    // self-loop is a param_error; remove_edge on a missing edge likewise.
    void add_edge(node_t u, node_t v);
    void remove_edge(node_t u, node_t v);

    long long label(node_t u) const { return labels_[u]; }
    void set_label(node_t u, long long lab) { labels_[u] = lab; }

    /// All edges as normalized (u <= v) pairs, sorted.
    std::vector<Edge> edges() const;

private:
    friend Graph load_edge_list(std::istream&, bool, std::size_t*);
    std::vector<std::vector<node_t>> adj_;
    std::vector<long long> labels_;
    std::size_t edge_count_ = 0;
};

/// Parse a whitespace-separated edge list. Lines starting with '#' are
/// comments. Self-loops are dropped and duplicate edges collapsed; labels map
/// to dense ids in order of first appearance on a kept edge.
///
/// In strict mode any malformed line is a parse_error (with line number); in
/// lenient mode such lines are skipped and counted into *skipped_lines.
/// Input that yields no nodes at all is a parse_error.
Graph load_edge_list(std::istream& in, bool strict = false,
                     std::size_t* skipped_lines = nullptr);

Graph load_edge_list_file(const std::string& path, bool strict = false,
                          std::size_t* skipped_lines = nullptr);

struct DegreeMoments {
    double mean_degree;         // <k>
    double mean_square_degree;  // <k^2>
    double beta_min;            // <k>/<k^2>, epidemic threshold
};

/// First and second moments of the degree distribution. Empty graph is a
/// param_error.
DegreeMoments degree_moments(const Graph& g);

/// Distance-2 neighbors of u: nodes v with (u,v) not an edge and at least one
/// common neighbor with u; u itself excluded. Sorted.
std::vector<node_t> distance2_neighbors(const Graph& g, node_t u);

}  // namespace coreres
