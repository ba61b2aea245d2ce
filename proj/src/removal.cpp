#include "coreres/removal.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

namespace coreres {

std::vector<int> core_strength(const Graph& g, const CoreState& cs) {
    const std::size_t n = g.node_count();
    std::vector<int> out(n, 0);
    for (node_t u = 0; u < static_cast<node_t>(n); ++u) {
        int geq = 0;
        for (node_t v : g.neighbors(u))
            if (cs.core[v] >= cs.core[u]) ++geq;
        out[u] = geq - cs.core[u] + 1;
    }
    return out;
}

Vulnerability find_vulnerable_and_sensitive(const Graph& g, const CoreState& cs) {
    const std::size_t n = g.node_count();
    Vulnerability vul;
    vul.vulnerable.assign(n, false);
    vul.sensitive_partners.resize(n);
    for (node_t u = 0; u < static_cast<node_t>(n); ++u) {
        std::vector<node_t> geq;
        for (node_t v : g.neighbors(u))
            if (cs.core[v] >= cs.core[u]) geq.push_back(v);
        if (cs.core[u] == static_cast<int>(geq.size()) && cs.core[u] > 0) {
            vul.vulnerable[u] = true;
            vul.sensitive_partners[u] = std::move(geq);
        }
    }
    return vul;
}

bool CoronaSet::in_ccn(int corona_id, node_t u) const {
    const auto& ccn = coronas[corona_id].ccn;
    return std::binary_search(ccn.begin(), ccn.end(), u);
}

int CoronaSet::corona_of_edge(const CoreState& cs, const Vulnerability& vul,
                              node_t u, node_t v) const {
    // sensitive for the endpoint with the smaller core number; for equal
    // cores both vulnerable endpoints share one corona
    node_t lo = cs.core[u] <= cs.core[v] ? u : v;
    node_t hi = lo == u ? v : u;
    if (vul.vulnerable[lo]) return corona_of_node[lo];
    if (cs.core[lo] == cs.core[hi] && vul.vulnerable[hi]) return corona_of_node[hi];
    return -1;
}

CoronaSet find_k_coronas(const Graph& g, const CoreState& cs, CoronaStats* stats) {
    const std::size_t n = g.node_count();
    Vulnerability vul = find_vulnerable_and_sensitive(g, cs);

    CoronaSet set;
    set.corona_of_node.assign(n, -1);

    // BFS over vulnerable nodes restricted to equal core value
    std::vector<node_t> stack;
    for (node_t s = 0; s < static_cast<node_t>(n); ++s) {
        if (!vul.vulnerable[s] || set.corona_of_node[s] != -1) continue;
        int id = static_cast<int>(set.coronas.size());
        Corona corona;
        corona.k = cs.core[s];
        set.corona_of_node[s] = id;
        stack.push_back(s);
        while (!stack.empty()) {
            node_t u = stack.back();
            stack.pop_back();
            corona.members.push_back(u);
            for (node_t v : g.neighbors(u)) {
                if (vul.vulnerable[v] && cs.core[v] == corona.k &&
                    set.corona_of_node[v] == -1) {
                    set.corona_of_node[v] = id;
                    stack.push_back(v);
                }
            }
        }
        std::sort(corona.members.begin(), corona.members.end());

        std::unordered_set<Edge, EdgeHash> kaes;
        for (node_t u : corona.members)
            for (node_t v : vul.sensitive_partners[u]) kaes.insert(Edge(u, v));
        corona.kaes.assign(kaes.begin(), kaes.end());
        std::sort(corona.kaes.begin(), corona.kaes.end());

        set.coronas.push_back(std::move(corona));
    }

    // one representative removal per corona decides its CCN
    for (Corona& c : set.coronas) {
        const Edge& rep = c.kaes.front();
        std::vector<CoreDelta> deltas = eval_remove(g, cs, rep.u, rep.v);
        if (stats) ++stats->eval_calls;
        c.ccn.reserve(deltas.size());
        for (const auto& d : deltas) c.ccn.push_back(d.node);
        std::sort(c.ccn.begin(), c.ccn.end());
    }
    return set;
}

Digraph build_removal_dependency_graph(const Graph& g, const CoreState& cs,
                                       const CoronaSet& coronas) {
    const std::size_t n = g.node_count();
    Vulnerability vul = find_vulnerable_and_sensitive(g, cs);

    Digraph rd(n);
    for (node_t u = 0; u < static_cast<node_t>(n); ++u) {
        if (vul.vulnerable[u]) {
            // removing any sensitive edge (u,v) decrements K(u)
            for (node_t v : g.neighbors(u))
                if (cs.core[u] <= cs.core[v]) rd.add_edge(v, u);
        } else {
            // Case 1: equal-core vulnerable neighbor whose corona's CCN
            // contains u means the cascade reaches u
            for (node_t v : g.neighbors(u)) {
                if (cs.core[v] != cs.core[u] || !vul.vulnerable[v]) continue;
                int cid = coronas.corona_of_node[v];
                if (coronas.in_ccn(cid, u)) rd.add_edge(v, u);
            }
        }
    }
    return rd;
}

Digraph build_removal_dependency_graph_naive(const Graph& g, const CoreState& cs) {
    Digraph rd(g.node_count());
    for (const Edge& e : g.edges()) {
        std::vector<CoreDelta> deltas = eval_remove(g, cs, e.u, e.v);
        for (const auto& d : deltas) {
            if (d.node == e.u) rd.add_edge(e.v, e.u);
            if (d.node == e.v) rd.add_edge(e.u, e.v);
        }
    }
    return rd;
}

RemovalStrengths removal_strengths(const Digraph& rd) {
    const std::size_t n = rd.node_count();
    RemovalStrengths rs;
    rs.rs_id.resize(n);
    rs.rs_od.resize(n);
    for (node_t u = 0; u < static_cast<node_t>(n); ++u) {
        int indeg = rd.in_degree(u);
        rs.rs_id[u] = indeg > 0 ? 1.0 / indeg
                                : std::numeric_limits<double>::infinity();
        rs.rs_od[u] = rd.out_degree(u);
    }
    return rs;
}

namespace {

// all size-r index subsets, lexicographic
bool next_combination(std::vector<int>& idx, int m) {
    int r = static_cast<int>(idx.size());
    for (int i = r - 1; i >= 0; --i) {
        if (idx[i] < m - (r - i)) {
            ++idx[i];
            for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

std::vector<CsWitness> cs_falsification_scan(const Graph& g, const CoreState& cs,
                                             int max_remove, bool max_core_only) {
    if (max_remove < 1) throw param_error("cs_falsification_scan: max_remove >= 1");
    std::vector<int> strength = core_strength(g, cs);
    std::vector<CsWitness> witnesses;

    for (node_t u = 0; u < static_cast<node_t>(g.node_count()); ++u) {
        if (strength[u] < 2) continue;
        if (max_core_only && cs.core[u] != cs.max_core) continue;

        const auto& nbrs = g.neighbors(u);
        int deg = static_cast<int>(nbrs.size());
        int cap = std::min(max_remove, strength[u] - 1);
        bool found = false;
        for (int r = 1; r <= cap && !found; ++r) {
            if (r > deg) break;
            std::vector<int> idx(r);
            for (int i = 0; i < r; ++i) idx[i] = i;
            do {
                Graph g2 = g;
                std::vector<Edge> removed;
                removed.reserve(r);
                for (int i : idx) {
                    g2.remove_edge(u, nbrs[i]);
                    removed.emplace_back(u, nbrs[i]);
                }
                CoreState after = core_decompose(g2);
                if (after.core[u] < cs.core[u]) {
                    witnesses.push_back(
                        {u, strength[u], std::move(removed), after.core[u]});
                    found = true;
                    break;
                }
            } while (next_combination(idx, deg));
        }
    }
    return witnesses;
}

}  // namespace coreres
