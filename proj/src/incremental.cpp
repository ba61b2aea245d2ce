#include "coreres/incremental.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace coreres {

namespace {

// Reusable per-thread scratch for the evaluation paths. Epoch stamps make
// clearing O(1); evaluations on different graphs can interleave safely.
struct EvalScratch {
    std::vector<std::uint64_t> in_region, peeled;
    std::vector<int> cd;
    std::vector<node_t> region, queue;
    std::uint64_t epoch = 0;

    void begin(std::size_t n) {
        if (in_region.size() < n) {
            in_region.resize(n, 0);
            peeled.resize(n, 0);
            cd.resize(n, 0);
        }
        ++epoch;
        region.clear();
        queue.clear();
    }
};

EvalScratch& scratch() {
    thread_local EvalScratch s;
    return s;
}

// Region = union of the subcores containing the given roots (all of core k),
// found by BFS over equal-core neighbors, or read from a SubcoreIndex.
void collect_region(const Graph& g, const CoreState& cs,
                    std::initializer_list<node_t> roots, int k,
                    const SubcoreIndex* subcores, EvalScratch& s) {
    if (subcores) {
        int first_id = -1;
        for (node_t r : roots) {
            int id = cs.subcore_id[r];
            if (id == first_id) continue;
            for (node_t w : subcores->members[id]) {
                s.in_region[w] = s.epoch;
                s.region.push_back(w);
            }
            if (first_id == -1) first_id = id;
        }
        return;
    }
    std::size_t head = 0;
    for (node_t r : roots) {
        if (s.in_region[r] == s.epoch) continue;
        s.in_region[r] = s.epoch;
        s.region.push_back(r);
    }
    while (head < s.region.size()) {
        node_t x = s.region[head++];
        for (node_t y : g.neighbors(x)) {
            if (cs.core[y] == k && s.in_region[y] != s.epoch) {
                s.in_region[y] = s.epoch;
                s.region.push_back(y);
            }
        }
    }
}

std::vector<CoreDelta> finish(std::vector<CoreDelta> deltas) {
    std::sort(deltas.begin(), deltas.end());
    return deltas;
}

}  // namespace

std::vector<CoreDelta> eval_remove(const Graph& g, const CoreState& cs, node_t u,
                                   node_t v) {
    if (!g.has_edge(u, v)) throw param_error("eval_remove: edge not in graph");
    const int k = std::min(cs.core[u], cs.core[v]);

    EvalScratch& s = scratch();
    s.begin(g.node_count());
    collect_region(g, cs, {cs.core[u] <= cs.core[v] ? u : v}, k, nullptr, s);

    // cd(w) = supporting neighbors of w in G \ (u,v): core > k, or core == k
    // and not yet peeled. Peel below k; peeled nodes drop to k-1.
    for (node_t w : s.region) {
        int c = 0;
        for (node_t x : g.neighbors(w)) {
            if ((w == u && x == v) || (w == v && x == u)) continue;  // removed
            if (cs.core[x] >= k) ++c;
        }
        s.cd[w] = c;
    }

    for (node_t w : s.region)
        if (s.cd[w] < k) {
            s.queue.push_back(w);
            s.peeled[w] = s.epoch;
        }
    for (std::size_t head = 0; head < s.queue.size(); ++head) {
        node_t w = s.queue[head];
        for (node_t x : g.neighbors(w)) {
            if ((w == u && x == v) || (w == v && x == u)) continue;
            if (cs.core[x] != k || s.in_region[x] != s.epoch) continue;
            if (s.peeled[x] == s.epoch) continue;
            if (--s.cd[x] < k) {
                s.peeled[x] = s.epoch;
                s.queue.push_back(x);
            }
        }
    }

    std::vector<CoreDelta> deltas;
    deltas.reserve(s.queue.size());
    for (node_t w : s.queue) deltas.push_back({w, k, k - 1});
    return finish(std::move(deltas));
}

std::vector<CoreDelta> eval_insert(const Graph& g, const CoreState& cs, node_t u,
                                   node_t v, const SubcoreIndex* subcores) {
    if (u == v) throw param_error("eval_insert: self-loop");
    if (g.has_edge(u, v)) throw param_error("eval_insert: edge already in graph");
    const int k = std::min(cs.core[u], cs.core[v]);

    EvalScratch& s = scratch();
    s.begin(g.node_count());
    if (cs.core[u] == cs.core[v])
        collect_region(g, cs, {u, v}, k, subcores, s);
    else
        collect_region(g, cs, {cs.core[u] < cs.core[v] ? u : v}, k, subcores, s);

    // cd(w) counts supporters in G + (u,v); survivors of peeling at threshold
    // k+1 rise to k+1.
    for (node_t w : s.region) {
        int c = 0;
        for (node_t x : g.neighbors(w))
            if (cs.core[x] >= k) ++c;
        if (w == u && cs.core[v] >= k) ++c;  // virtual edge
        if (w == v && cs.core[u] >= k) ++c;
        s.cd[w] = c;
    }

    for (node_t w : s.region)
        if (s.cd[w] < k + 1) {
            s.queue.push_back(w);
            s.peeled[w] = s.epoch;
        }
    auto relax = [&](node_t x) {
        if (s.in_region[x] != s.epoch || s.peeled[x] == s.epoch) return;
        if (--s.cd[x] < k + 1) {
            s.peeled[x] = s.epoch;
            s.queue.push_back(x);
        }
    };
    for (std::size_t head = 0; head < s.queue.size(); ++head) {
        node_t w = s.queue[head];
        for (node_t x : g.neighbors(w))
            if (cs.core[x] == k) relax(x);
        if (w == u && cs.core[v] == k) relax(v);
        if (w == v && cs.core[u] == k) relax(u);
    }

    std::vector<CoreDelta> deltas;
    for (node_t w : s.region)
        if (s.peeled[w] != s.epoch) deltas.push_back({w, k, k + 1});
    return finish(std::move(deltas));
}

ChangeReport recompute_oracle(const Graph& g, const EdgeChange& change) {
    if (change.u == change.v) throw param_error("recompute_oracle: self-loop");
    Graph g2 = g;
    if (change.kind == EdgeChange::Kind::remove)
        g2.remove_edge(change.u, change.v);
    else
        g2.add_edge(change.u, change.v);

    CoreState before = core_decompose(g);
    CoreState after = core_decompose(g2);
    ChangeReport rep;
    for (node_t w = 0; w < static_cast<node_t>(g.node_count()); ++w)
        if (before.core[w] != after.core[w])
            rep.changed.push_back({w, before.core[w], after.core[w]});
    rep.updated_core = std::move(after);
    return rep;
}

namespace {

// Derived indices (shells, subcores) are rebuilt against the post-change
// adjacency.
ChangeReport make_report(const Graph& changed_graph, const CoreState& cs,
                         std::vector<CoreDelta> deltas) {
    ChangeReport rep;
    std::vector<int> cores = cs.core;
    for (const auto& d : deltas) cores[d.node] = d.new_core;
    rep.changed = std::move(deltas);
    rep.updated_core = core_state_from_cores(changed_graph, std::move(cores));
    return rep;
}

}  // namespace

ChangeReport remove_edge_update(const Graph& g, const CoreState& cs, node_t u,
                                node_t v) {
    std::vector<CoreDelta> deltas = eval_remove(g, cs, u, v);
    Graph g2 = g;
    g2.remove_edge(u, v);
    return make_report(g2, cs, std::move(deltas));
}

ChangeReport insert_edge_update(const Graph& g, const CoreState& cs, node_t u,
                                node_t v, const SubcoreIndex* subcores) {
    std::vector<CoreDelta> deltas = eval_insert(g, cs, u, v, subcores);
    Graph g2 = g;
    g2.add_edge(u, v);
    return make_report(g2, cs, std::move(deltas));
}

}  // namespace coreres
