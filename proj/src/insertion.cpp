#include "coreres/insertion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <unordered_set>

#include "coreres/incremental.hpp"

namespace coreres {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

std::vector<Edge> InsertionCandidateGraph::edge_set() const {
    std::vector<Edge> out;
    out.reserve(edges.size());
    for (const auto& ce : edges) out.emplace_back(ce.u, ce.v);
    std::sort(out.begin(), out.end());
    return out;
}

InsertionCandidateGraph build_candidate_graph(const Graph& g, const CoreState& cs,
                                              int b, std::uint64_t seed) {
    (void)cs;  // candidate selection is structural only
    const node_t n = static_cast<node_t>(g.node_count());
    if (b < 1) throw param_error("build_candidate_graph: b >= 1 required");
    if (b >= static_cast<int>(g.node_count()))
        throw param_error("build_candidate_graph: b must be smaller than |V|");

    InsertionCandidateGraph ic;
    ic.b = b;
    ic.seed = seed;
    std::mt19937_64 rng(seed);
    std::unordered_set<Edge, EdgeHash> seen;

    auto push = [&](node_t u, node_t v, CandidateOrigin origin) {
        Edge e(u, v);
        if (seen.insert(e).second) ic.edges.push_back({e.u, e.v, origin});
    };

    for (node_t u = 0; u < n; ++u) {
        std::vector<node_t> gamma = distance2_neighbors(g, u);
        if (static_cast<int>(gamma.size()) > b) {
            // sample b distinct partners from gamma
            for (int i = 0; i < b; ++i) {
                std::uniform_int_distribution<std::size_t> pick(i, gamma.size() - 1);
                std::swap(gamma[i], gamma[pick(rng)]);
                push(u, gamma[i], CandidateOrigin::distance2);
            }
        } else {
            for (node_t v : gamma) push(u, v, CandidateOrigin::distance2);
            int need = b - static_cast<int>(gamma.size());
            // random non-neighbors outside gamma (and not u itself)
            std::size_t eligible =
                g.node_count() - 1 - g.degree(u) - gamma.size();
            if (static_cast<std::size_t>(need) >= eligible) {
                // pool exhausted: take everything there is
                std::vector<bool> excluded(n, false);
                excluded[u] = true;
                for (node_t v : g.neighbors(u)) excluded[v] = true;
                for (node_t v : gamma) excluded[v] = true;
                for (node_t w = 0; w < n; ++w)
                    if (!excluded[w]) push(u, w, CandidateOrigin::random_fill);
                if (static_cast<std::size_t>(need) > eligible) ++ic.shortfall_nodes;
            } else {
                std::unordered_set<node_t> picked;
                std::uniform_int_distribution<node_t> any(0, n - 1);
                while (static_cast<int>(picked.size()) < need) {
                    node_t w = any(rng);
                    if (w == u || picked.count(w) || g.has_edge(u, w)) continue;
                    if (std::binary_search(gamma.begin(), gamma.end(), w)) continue;
                    picked.insert(w);
                    push(u, w, CandidateOrigin::random_fill);
                }
            }
        }
    }
    return ic;
}

namespace {

// classification against a precomputed per-node count of neighbors with a
// strictly higher core number
IscClassification classify_with_counts(const Graph& g, const CoreState& cs,
                                       const std::vector<int>& gt_count,
                                       node_t u, node_t v) {
    IscClassification c{};
    c.lo = cs.core[u] <= cs.core[v] ? u : v;
    c.hi = c.lo == u ? v : u;

    const int klo = cs.core[c.lo], khi = cs.core[c.hi];
    if (klo == khi) {
        if (gt_count[c.lo] == klo && gt_count[c.hi] == khi) {
            c.rule = IscRule::equal_core_pair;
            c.lo_increments = c.hi_increments = true;
        } else {
            c.rule = IscRule::fallback;
        }
        return c;
    }
    // klo < khi: only the lower endpoint can rise
    if (gt_count[c.lo] == klo) {
        c.rule = IscRule::higher_core_fill;
        c.lo_increments = true;
        return c;
    }
    if (gt_count[c.lo] == klo - 1) {
        for (node_t w : g.neighbors(c.lo)) {
            if (cs.core[w] == klo && gt_count[w] == cs.core[w]) {
                c.rule = IscRule::neighbor_assist;
                c.lo_increments = true;
                c.co_incremented = w;
                return c;
            }
        }
    }
    c.rule = IscRule::fallback;
    return c;
}

std::vector<int> higher_core_counts(const Graph& g, const CoreState& cs) {
    std::vector<int> gt(g.node_count(), 0);
    for (node_t x = 0; x < static_cast<node_t>(g.node_count()); ++x)
        for (node_t y : g.neighbors(x))
            if (cs.core[y] > cs.core[x]) ++gt[x];
    return gt;
}

}  // namespace

IscClassification isc_classify(const Graph& g, const CoreState& cs, node_t u,
                               node_t v) {
    if (g.has_edge(u, v)) throw param_error("isc_classify: edge already in graph");
    return classify_with_counts(g, cs, higher_core_counts(g, cs), u, v);
}

namespace {

InsertionDependencyGraph build_id_graph(const Graph& g, const CoreState& cs,
                                        const InsertionCandidateGraph& ic,
                                        bool use_rules,
                                        const SubcoreIndex* subcores) {
    InsertionDependencyGraph out;
    out.dg = Digraph(g.node_count());

    std::vector<int> gt_count;
    if (use_rules) gt_count = higher_core_counts(g, cs);

    for (const CandidateEdge& ce : ic.edges) {
        if (use_rules) {
            IscClassification c = classify_with_counts(g, cs, gt_count, ce.u, ce.v);
            switch (c.rule) {
                case IscRule::equal_core_pair:
                    ++out.stats.equal_core_pair;
                    out.dg.add_edge(c.hi, c.lo);
                    out.dg.add_edge(c.lo, c.hi);
                    continue;
                case IscRule::higher_core_fill:
                    ++out.stats.higher_core_fill;
                    out.dg.add_edge(c.hi, c.lo);
                    continue;
                case IscRule::neighbor_assist:
                    ++out.stats.neighbor_assist;
                    // K(w) rises too, but dependency edges connect only the
                    // candidate endpoints
                    out.dg.add_edge(c.hi, c.lo);
                    continue;
                case IscRule::fallback:
                    ++out.stats.fallback;
                    break;
            }
        } else {
            ++out.stats.fallback;
        }
        std::vector<CoreDelta> deltas = eval_insert(g, cs, ce.u, ce.v, subcores);
        for (const auto& d : deltas) {
            if (d.node == ce.u) out.dg.add_edge(ce.v, ce.u);
            if (d.node == ce.v) out.dg.add_edge(ce.u, ce.v);
        }
    }
    return out;
}

}  // namespace

InsertionDependencyGraph build_insertion_dependency_graph(
    const Graph& g, const CoreState& cs, const InsertionCandidateGraph& ic,
    const SubcoreIndex* subcores) {
    if (subcores) return build_id_graph(g, cs, ic, true, subcores);
    SubcoreIndex idx = build_subcore_index(g, cs);
    return build_id_graph(g, cs, ic, true, &idx);
}

InsertionDependencyGraph build_insertion_dependency_graph_naive(
    const Graph& g, const CoreState& cs, const InsertionCandidateGraph& ic,
    const SubcoreIndex* subcores) {
    return build_id_graph(g, cs, ic, false, subcores);
}

InsertionStrengths insertion_strengths(const Graph& g, const CoreState& cs, int b,
                                       int trials, std::uint64_t seed) {
    if (trials < 1) throw param_error("insertion_strengths: trials >= 1 required");
    const std::size_t n = g.node_count();

    InsertionStrengths s;
    s.b = b;
    s.trials = trials;
    s.seed = seed;
    s.per_trial_is_id.assign(trials, std::vector<double>(n));
    s.per_trial_is_od.assign(trials, std::vector<double>(n));

    SubcoreIndex idx = build_subcore_index(g, cs);  // shared by all trials
    for (int t = 0; t < trials; ++t) {
        InsertionCandidateGraph ic =
            build_candidate_graph(g, cs, b, seed ^ static_cast<std::uint64_t>(t));
        InsertionDependencyGraph id =
            build_insertion_dependency_graph(g, cs, ic, &idx);
        s.stats.higher_core_fill += id.stats.higher_core_fill;
        s.stats.equal_core_pair += id.stats.equal_core_pair;
        s.stats.neighbor_assist += id.stats.neighbor_assist;
        s.stats.fallback += id.stats.fallback;
        for (node_t u = 0; u < static_cast<node_t>(n); ++u) {
            int indeg = id.dg.in_degree(u);
            s.per_trial_is_id[t][u] = indeg > 0 ? 1.0 / indeg : kInf;
            s.per_trial_is_od[t][u] = id.dg.out_degree(u);
        }
    }

    s.is_id.assign(n, 0.0);
    s.is_od.assign(n, 0.0);
    s.stddev_is_id.assign(n, 0.0);
    for (node_t u = 0; u < static_cast<node_t>(n); ++u) {
        bool any_inf = false, all_inf = true;
        double sum_id = 0.0, sum_od = 0.0;
        for (int t = 0; t < trials; ++t) {
            double x = s.per_trial_is_id[t][u];
            if (std::isinf(x))
                any_inf = true;
            else {
                all_inf = false;
                sum_id += x;
            }
            sum_od += s.per_trial_is_od[t][u];
        }
        s.is_od[u] = sum_od / trials;
        if (any_inf) {
            s.is_id[u] = kInf;
            s.stddev_is_id[u] = all_inf ? 0.0 : kInf;
        } else {
            double mean = sum_id / trials;
            s.is_id[u] = mean;
            double var = 0.0;
            for (int t = 0; t < trials; ++t) {
                double d = s.per_trial_is_id[t][u] - mean;
                var += d * d;
            }
            s.stddev_is_id[u] = std::sqrt(var / trials);
        }
    }

    s.is_id_star.assign(n, 0.0);
    s.is_od_star.assign(n, 0.0);
    for (node_t u = 0; u < static_cast<node_t>(n); ++u) {
        double acc_id = s.is_id[u], acc_od = s.is_od[u];
        for (node_t v : g.neighbors(u)) {
            acc_id += s.is_id[v];
            acc_od += s.is_od[v];
        }
        s.is_id_star[u] = acc_id;
        s.is_od_star[u] = acc_od;
    }
    return s;
}

}  // namespace coreres
