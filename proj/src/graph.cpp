#include "coreres/graph.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace coreres {

bool Graph::has_edge(node_t u, node_t v) const {
    if (!valid_node(u) || !valid_node(v)) return false;
    const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    node_t other = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(a.begin(), a.end(), other);
}

void Graph::add_edge(node_t u, node_t v) {
    if (!valid_node(u) || !valid_node(v))
        throw param_error("add_edge: node id out of range");
    if (u == v) throw param_error("add_edge: self-loop");
    if (has_edge(u, v)) throw param_error("add_edge: edge already present");
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
    ++edge_count_;
}

void Graph::remove_edge(node_t u, node_t v) {
    if (!has_edge(u, v)) throw param_error("remove_edge: edge not present");
    auto it = std::lower_bound(adj_[u].begin(), adj_[u].end(), v);
    adj_[u].erase(it);
    it = std::lower_bound(adj_[v].begin(), adj_[v].end(), u);
    adj_[v].erase(it);
    --edge_count_;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (node_t u = 0; u < static_cast<node_t>(adj_.size()); ++u)
        for (node_t v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

namespace {

// A token is a label if it parses as a (possibly signed) integer in full.
bool parse_label(const std::string& tok, long long& out) {
    if (tok.empty()) return false;
    std::size_t pos = 0;
    try {
        out = std::stoll(tok, &pos);
    } catch (...) {
        return false;
    }
    return pos == tok.size();
}

}  // namespace

Graph load_edge_list(std::istream& in, bool strict, std::size_t* skipped_lines) {
    std::unordered_map<long long, node_t> id_of;
    std::vector<long long> labels;
    std::vector<std::pair<node_t, node_t>> raw_edges;
    std::size_t skipped = 0;

    auto intern = [&](long long lab) {
        auto it = id_of.find(lab);
        if (it != id_of.end()) return it->second;
        node_t id = static_cast<node_t>(labels.size());
        id_of.emplace(lab, id);
        labels.push_back(lab);
        return id;
    };

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;

        std::istringstream ls(line);
        std::string ta, tb;
        long long la, lb;
        bool ok = (ls >> ta >> tb) && parse_label(ta, la) && parse_label(tb, lb);
        if (ok) {
            // anything trailing beyond two labels makes the line malformed
            std::string rest;
            if (ls >> rest) ok = false;
        }
        if (!ok) {
            if (strict)
                throw parse_error("malformed edge line " + std::to_string(line_no) +
                                      ": '" + line + "'",
                                  line_no);
            ++skipped;
            continue;
        }
        if (la == lb) continue;  // self-loop
        node_t ua = intern(la);  // keep first-appearance order
        node_t ub = intern(lb);
        raw_edges.emplace_back(ua, ub);
    }
    if (skipped_lines) *skipped_lines = skipped;

    if (labels.empty())
        throw parse_error("edge list is empty (no valid edges)", line_no);

    Graph g;
    g.adj_.resize(labels.size());
    g.labels_ = std::move(labels);

    std::unordered_set<Edge, EdgeHash> seen;
    seen.reserve(raw_edges.size() * 2);
    for (auto [u, v] : raw_edges) {
        if (!seen.insert(Edge(u, v)).second) continue;  // duplicate
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
        ++g.edge_count_;
    }
    for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

Graph load_edge_list_file(const std::string& path, bool strict,
                          std::size_t* skipped_lines) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open graph file: " + path);
    return load_edge_list(in, strict, skipped_lines);
}

DegreeMoments degree_moments(const Graph& g) {
    if (g.node_count() == 0) throw param_error("degree_moments: empty graph");
    double sum = 0.0, sum_sq = 0.0;
    for (node_t u = 0; u < static_cast<node_t>(g.node_count()); ++u) {
        double d = static_cast<double>(g.degree(u));
        sum += d;
        sum_sq += d * d;
    }
    double n = static_cast<double>(g.node_count());
    DegreeMoments m;
    m.mean_degree = sum / n;
    m.mean_square_degree = sum_sq / n;
    m.beta_min = sum_sq > 0.0 ? m.mean_degree / m.mean_square_degree : 0.0;
    return m;
}

std::vector<node_t> distance2_neighbors(const Graph& g, node_t u) {
    if (!g.valid_node(u)) throw param_error("distance2_neighbors: invalid node id");
    std::vector<node_t> out;
    std::unordered_set<node_t> seen;
    for (node_t w : g.neighbors(u)) {
        for (node_t v : g.neighbors(w)) {
            if (v == u || g.has_edge(u, v)) continue;
            if (seen.insert(v).second) out.push_back(v);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace coreres
