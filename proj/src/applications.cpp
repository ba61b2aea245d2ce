#include "coreres/applications.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <unordered_map>

#include "coreres/removal.hpp"

namespace coreres {

Method method_from_string(const std::string& name) {
    static const std::map<std::string, Method> table = {
        {"rs_id", Method::rs_id},
        {"rs_od", Method::rs_od},
        {"is_id", Method::is_id},
        {"is_od", Method::is_od},
        {"is_id_star", Method::is_id_star},
        {"is_od_star", Method::is_od_star},
        {"random", Method::random},
        {"degree", Method::degree},
        {"core_number", Method::core_number},
        {"core_strength", Method::core_strength},
        {"kshell", Method::kshell},
        {"iks", Method::iks},
    };
    auto it = table.find(name);
    if (it == table.end()) throw param_error("unknown method: " + name);
    return it->second;
}

std::string method_name(Method m) {
    switch (m) {
        case Method::rs_id: return "rs_id";
        case Method::rs_od: return "rs_od";
        case Method::is_id: return "is_id";
        case Method::is_od: return "is_od";
        case Method::is_id_star: return "is_id_star";
        case Method::is_od_star: return "is_od_star";
        case Method::random: return "random";
        case Method::degree: return "degree";
        case Method::core_number: return "core_number";
        case Method::core_strength: return "core_strength";
        case Method::kshell: return "kshell";
        case Method::iks: return "iks";
    }
    return "?";
}

namespace {

bool is_strength_method(Method m) {
    switch (m) {
        case Method::rs_id:
        case Method::rs_od:
        case Method::is_id:
        case Method::is_od:
        case Method::is_id_star:
        case Method::is_od_star:
            return true;
        default:
            return false;
    }
}

void check_edge_method(Method m) {
    if (m == Method::kshell || m == Method::iks)
        throw param_error("method " + method_name(m) +
                          " is a seeding baseline, not an edge score");
}

}  // namespace

EdgeScorePolicy EdgeScorePolicy::removal(Method m) {
    check_edge_method(m);
    EdgeScorePolicy p{m, Aggregation::sum, Order::highest};
    if (m == Method::rs_id) p.order = Order::lowest;
    return p;
}

EdgeScorePolicy EdgeScorePolicy::insertion(Method m) {
    check_edge_method(m);
    EdgeScorePolicy p{m, Aggregation::sum, Order::highest};
    if (is_strength_method(m)) {
        p.agg = Aggregation::max;
        p.order = Order::lowest;
    }
    return p;
}

std::vector<double> baseline_scores(const Graph& g, const CoreState& cs,
                                    Method method) {
    const std::size_t n = g.node_count();
    std::vector<double> out(n, 0.0);
    switch (method) {
        case Method::degree:
            for (node_t u = 0; u < static_cast<node_t>(n); ++u)
                out[u] = static_cast<double>(g.degree(u));
            return out;
        case Method::core_number:
        case Method::kshell:
            for (node_t u = 0; u < static_cast<node_t>(n); ++u)
                out[u] = static_cast<double>(cs.core[u]);
            return out;
        case Method::core_strength: {
            std::vector<int> strength = core_strength(g, cs);
            for (node_t u = 0; u < static_cast<node_t>(n); ++u)
                out[u] = static_cast<double>(strength[u]);
            return out;
        }
        case Method::iks: {
            // node information entropy over neighbor degree mass
            double total_deg = 2.0 * static_cast<double>(g.edge_count());
            if (total_deg <= 0.0) return out;
            for (node_t u = 0; u < static_cast<node_t>(n); ++u) {
                double h = 0.0;
                for (node_t v : g.neighbors(u)) {
                    double p = static_cast<double>(g.degree(v)) / total_deg;
                    if (p > 0.0) h -= p * std::log(p);
                }
                out[u] = h;
            }
            return out;
        }
        case Method::random:
            return out;  // scores unused
        default:
            throw param_error("baseline_scores: " + method_name(method) +
                              " is not a baseline method");
    }
}

namespace {

struct ScoredEdge {
    double score;
    Edge e;
};

std::vector<ScoredEdge> rank_edges(const std::vector<Edge>& edges,
                                   const std::vector<double>& scores,
                                   const EdgeScorePolicy& policy) {
    std::vector<ScoredEdge> ranked;
    ranked.reserve(edges.size());
    for (const Edge& e : edges) {
        double s = policy.agg == Aggregation::sum
                       ? scores[e.u] + scores[e.v]
                       : std::max(scores[e.u], scores[e.v]);
        ranked.push_back({s, e});
    }
    bool asc = policy.order == Order::lowest;
    std::sort(ranked.begin(), ranked.end(),
              [asc](const ScoredEdge& a, const ScoredEdge& b) {
                  if (a.score != b.score)
                      return asc ? a.score < b.score : a.score > b.score;
                  return a.e < b.e;
              });
    return ranked;
}

}  // namespace

std::vector<Edge> select_critical_removals(const Graph& g, const CoreState& cs,
                                           const std::vector<double>& scores,
                                           const EdgeScorePolicy& policy,
                                           std::size_t c, std::uint64_t seed) {
    check_edge_method(policy.method);
    std::vector<Edge> edges = g.edges();
    if (c > edges.size())
        throw param_error("select_critical_removals: budget exceeds |E|");

    if (policy.method == Method::random) {
        std::mt19937_64 rng(seed);
        std::shuffle(edges.begin(), edges.end(), rng);
        edges.resize(c);
        return edges;
    }

    // scored policies draw from the KAES edges only: removing anything else
    // leaves every core number unchanged, and a second edge from the same
    // KAES is redundant. The pool can run out before the budget does.
    CoronaSet coronas = find_k_coronas(g, cs);
    Vulnerability vul = find_vulnerable_and_sensitive(g, cs);
    std::vector<bool> used(coronas.coronas.size(), false);

    std::vector<Edge> selected;
    for (const ScoredEdge& se : rank_edges(edges, scores, policy)) {
        if (selected.size() == c) break;
        int cid = coronas.corona_of_edge(cs, vul, se.e.u, se.e.v);
        if (cid < 0 || used[cid]) continue;
        used[cid] = true;
        selected.push_back(se.e);
    }
    return selected;
}

std::vector<Edge> insertion_candidate_pairs(const Graph& g) {
    // count shared neighbors through each common hub
    std::unordered_map<Edge, int, EdgeHash> common;
    for (node_t w = 0; w < static_cast<node_t>(g.node_count()); ++w) {
        const auto& nbrs = g.neighbors(w);
        for (std::size_t i = 0; i < nbrs.size(); ++i)
            for (std::size_t j = i + 1; j < nbrs.size(); ++j)
                ++common[Edge(nbrs[i], nbrs[j])];
    }
    std::vector<Edge> out;
    for (const auto& [e, cnt] : common)
        if (cnt >= 2 && !g.has_edge(e.u, e.v)) out.push_back(e);
    std::sort(out.begin(), out.end());
    return out;
}

InsertionCampaign run_insertion_campaign(const Graph& g, const CoreState& cs,
                                         const std::vector<double>& scores,
                                         const EdgeScorePolicy& policy,
                                         std::size_t c, std::uint64_t seed) {
    check_edge_method(policy.method);
    std::vector<Edge> candidates = insertion_candidate_pairs(g);

    std::vector<Edge> order;
    if (policy.method == Method::random) {
        std::mt19937_64 rng(seed);
        std::shuffle(candidates.begin(), candidates.end(), rng);
        order = std::move(candidates);
    } else {
        for (const ScoredEdge& se : rank_edges(candidates, scores, policy))
            order.push_back(se.e);
    }

    InsertionCampaign campaign;
    Graph cur = g;
    CoreState cur_cs = cs;
    std::size_t off_initial = 0;  // nodes with core != initial core
    const double n = static_cast<double>(g.node_count());

    for (const Edge& e : order) {
        if (campaign.applied.size() == c) break;
        bool u_raised = cur_cs.core[e.u] > cs.core[e.u];
        bool v_raised = cur_cs.core[e.v] > cs.core[e.v];
        if (u_raised && v_raised) continue;  // skip rule
        ChangeReport rep = insert_edge_update(cur, cur_cs, e.u, e.v);
        cur.add_edge(e.u, e.v);
        for (const CoreDelta& d : rep.changed)
            if (d.old_core == cs.core[d.node]) ++off_initial;
        cur_cs = std::move(rep.updated_core);
        campaign.applied.push_back(e);
        campaign.f_after.push_back(100.0 * static_cast<double>(off_initial) / n);
    }
    return campaign;
}

std::vector<Edge> select_critical_insertions(const Graph& g, const CoreState& cs,
                                             const std::vector<double>& scores,
                                             const EdgeScorePolicy& policy,
                                             std::size_t c, std::uint64_t seed) {
    return run_insertion_campaign(g, cs, scores, policy, c, seed).applied;
}

double measure_F(const Graph& g, const CoreState& initial,
                 const std::vector<Edge>& edges, EdgeChange::Kind kind) {
    Graph g2 = g;
    for (const Edge& e : edges) {
        if (kind == EdgeChange::Kind::remove)
            g2.remove_edge(e.u, e.v);
        else
            g2.add_edge(e.u, e.v);
    }
    CoreState after = core_decompose(g2);
    std::size_t off = 0;
    for (std::size_t u = 0; u < g.node_count(); ++u)
        if (after.core[u] != initial.core[u]) ++off;
    return 100.0 * static_cast<double>(off) / static_cast<double>(g.node_count());
}

std::vector<node_t> select_spreaders(const Graph& g, const CoreState& cs,
                                     const std::vector<double>& scores,
                                     double fraction, std::uint64_t seed) {
    if (fraction <= 0.0 || fraction > 1.0)
        throw param_error("select_spreaders: fraction in (0,1] required");
    const std::size_t n = g.node_count();
    std::size_t quota = std::min(
        n, static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(n))));

    std::mt19937_64 rng(seed);
    std::vector<bool> chosen(n, false);
    std::vector<node_t> out;
    out.reserve(quota);

    // unchosen node with the largest score in shell k; ties broken randomly
    auto pick_from_shell = [&](int k) -> node_t {
        node_t best = -1;
        double best_score = 0.0;
        std::size_t tie_count = 0;
        for (node_t u : cs.shells[k]) {
            if (chosen[u]) continue;
            if (best == -1 || scores[u] > best_score) {
                best = u;
                best_score = scores[u];
                tie_count = 1;
            } else if (scores[u] == best_score) {
                ++tie_count;
                std::uniform_int_distribution<std::size_t> d(0, tie_count - 1);
                if (d(rng) == 0) best = u;
            }
        }
        return best;
    };

    // repeated passes from the highest shell down to the 1-shell
    while (out.size() < quota) {
        bool progress = false;
        for (int k = cs.max_core; k >= 1 && out.size() < quota; --k) {
            node_t best = pick_from_shell(k);
            if (best != -1) {
                chosen[best] = true;
                out.push_back(best);
                progress = true;
            }
        }
        if (!progress) break;
    }
    // isolated nodes fill any remaining quota
    while (out.size() < quota) {
        node_t best = pick_from_shell(0);
        if (best == -1) break;
        chosen[best] = true;
        out.push_back(best);
    }
    return out;
}

std::vector<node_t> select_top_nodes(const std::vector<double>& scores,
                                     double fraction, std::uint64_t seed) {
    if (fraction <= 0.0 || fraction > 1.0)
        throw param_error("select_top_nodes: fraction in (0,1] required");
    const std::size_t n = scores.size();
    std::size_t quota = std::min(
        n, static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(n))));

    std::mt19937_64 rng(seed);
    std::vector<std::uint64_t> tiebreak(n);
    for (auto& t : tiebreak) t = rng();
    std::vector<node_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<node_t>(i);
    std::sort(order.begin(), order.end(), [&](node_t a, node_t b) {
        if (scores[a] != scores[b]) return scores[a] > scores[b];
        return tiebreak[a] < tiebreak[b];
    });
    order.resize(quota);
    return order;
}

std::vector<node_t> select_seeds(const Graph& g, const CoreState& cs,
                                 Method method, const std::vector<double>& scores,
                                 double fraction, std::uint64_t seed) {
    switch (method) {
        case Method::random: {
            std::vector<double> uniform(g.node_count(), 0.0);
            return select_top_nodes(uniform, fraction, seed);
        }
        case Method::kshell:
        case Method::core_number:
        case Method::degree:
        case Method::core_strength:
            return select_top_nodes(scores, fraction, seed);
        case Method::iks:
        default:
            return select_spreaders(g, cs, scores, fraction, seed);
    }
}

}  // namespace coreres
