#include "coreres/core.hpp"

#include <algorithm>

namespace coreres {

CoreState core_decompose(const Graph& g) {
    const std::size_t n = g.node_count();
    std::vector<int> deg(n), pos(n), vert(n), bin;

    int max_deg = 0;
    for (std::size_t u = 0; u < n; ++u) {
        deg[u] = static_cast<int>(g.degree(u));
        max_deg = std::max(max_deg, deg[u]);
    }
    bin.assign(max_deg + 1, 0);
    for (std::size_t u = 0; u < n; ++u) ++bin[deg[u]];
    int start = 0;
    for (int d = 0; d <= max_deg; ++d) {
        int count = bin[d];
        bin[d] = start;
        start += count;
    }
    for (std::size_t u = 0; u < n; ++u) {
        pos[u] = bin[deg[u]]++;
        vert[pos[u]] = static_cast<node_t>(u);
    }
    for (int d = max_deg; d > 0; --d) bin[d] = bin[d - 1];
    if (max_deg >= 0 && !bin.empty()) bin[0] = 0;

    std::vector<int> core(n, 0);
    int k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        node_t v = vert[i];
        k = std::max(k, deg[v]);
        core[v] = k;
        for (node_t w : g.neighbors(v)) {
            if (deg[w] > deg[v]) {
                // move w to the front of its bucket, then shift it down
                int dw = deg[w], pw = pos[w];
                int pfront = bin[dw];
                node_t front = vert[pfront];
                if (w != front) {
                    std::swap(vert[pw], vert[pfront]);
                    pos[w] = pfront;
                    pos[front] = pw;
                }
                ++bin[dw];
                --deg[w];
            }
        }
    }
    return core_state_from_cores(g, std::move(core));
}

CoreState core_state_from_cores(const Graph& g, std::vector<int> cores) {
    CoreState cs;
    cs.core = std::move(cores);
    const std::size_t n = g.node_count();
    cs.max_core = 0;
    for (std::size_t u = 0; u < n; ++u) cs.max_core = std::max(cs.max_core, cs.core[u]);

    cs.shells.assign(cs.max_core + 1, {});
    for (std::size_t u = 0; u < n; ++u)
        cs.shells[cs.core[u]].push_back(static_cast<node_t>(u));

    // subcores: BFS over equal-core neighbors
    cs.subcore_id.assign(n, -1);
    int next_id = 0;
    std::vector<node_t> stack;
    for (std::size_t s = 0; s < n; ++s) {
        if (cs.subcore_id[s] != -1) continue;
        int id = next_id++;
        cs.subcore_id[s] = id;
        stack.push_back(static_cast<node_t>(s));
        while (!stack.empty()) {
            node_t u = stack.back();
            stack.pop_back();
            for (node_t v : g.neighbors(u)) {
                if (cs.subcore_id[v] == -1 && cs.core[v] == cs.core[u]) {
                    cs.subcore_id[v] = id;
                    stack.push_back(v);
                }
            }
        }
    }
    return cs;
}

SubcoreIndex build_subcore_index(const Graph& g, const CoreState& cs) {
    SubcoreIndex idx;
    int max_id = -1;
    for (int id : cs.subcore_id) max_id = std::max(max_id, id);
    idx.members.assign(max_id + 1, {});
    for (node_t u = 0; u < static_cast<node_t>(g.node_count()); ++u)
        idx.members[cs.subcore_id[u]].push_back(u);
    return idx;
}

int h_index(std::vector<int> values) {
    std::sort(values.begin(), values.end(), std::greater<int>());
    int h = 0;
    for (std::size_t i = 0; i < values.size(); ++i)
        if (values[i] >= static_cast<int>(i) + 1) h = static_cast<int>(i) + 1;
    return h;
}

bool h_index_check(const Graph& g, const CoreState& cs) {
    for (node_t u = 0; u < static_cast<node_t>(g.node_count()); ++u) {
        std::vector<int> nbr_cores;
        nbr_cores.reserve(g.degree(u));
        for (node_t v : g.neighbors(u)) nbr_cores.push_back(cs.core[v]);
        if (h_index(std::move(nbr_cores)) != cs.core[u]) return false;
    }
    return true;
}

std::vector<node_t> DeltaPartition::geq_members(node_t u) const {
    std::vector<node_t> out = eq_members[u];
    out.insert(out.end(), gt_members[u].begin(), gt_members[u].end());
    std::sort(out.begin(), out.end());
    return out;
}

DeltaPartition delta_partition(const Graph& g, const CoreState& cs) {
    const std::size_t n = g.node_count();
    DeltaPartition dp;
    dp.lt.assign(n, 0);
    dp.eq.assign(n, 0);
    dp.gt.assign(n, 0);
    dp.lt_members.resize(n);
    dp.eq_members.resize(n);
    dp.gt_members.resize(n);
    for (node_t u = 0; u < static_cast<node_t>(n); ++u) {
        for (node_t v : g.neighbors(u)) {
            if (cs.core[v] < cs.core[u]) {
                ++dp.lt[u];
                dp.lt_members[u].push_back(v);
            } else if (cs.core[v] == cs.core[u]) {
                ++dp.eq[u];
                dp.eq_members[u].push_back(v);
            } else {
                ++dp.gt[u];
                dp.gt_members[u].push_back(v);
            }
        }
    }
    return dp;
}

}  // namespace coreres
