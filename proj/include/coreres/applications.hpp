#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coreres/core.hpp"
#include "coreres/graph.hpp"
#include "coreres/incremental.hpp"

namespace coreres {

/// Node scoring methods usable for edge selection and spreader seeding.
/// kshell and iks are seeding-only baselines.
enum class Method {
    rs_id,
    rs_od,
    is_id,
    is_od,
    is_id_star,
    is_od_star,
    random,
    degree,
    core_number,
    core_strength,
    kshell,
    iks,
};

Method method_from_string(const std::string& name);
std::string method_name(Method m);

enum class Aggregation { sum, max };
enum class Order { lowest, highest };

struct EdgeScorePolicy {
    Method method;
    Aggregation agg;
    Order order;

    /// The selection conventions used in the experiments: removal scores sum
    /// the endpoints (lowest-first for rs_id, highest otherwise); insertion
    /// scores take the max endpoint (lowest-first for the is_* measures,
    /// highest for baselines).
    static EdgeScorePolicy removal(Method m);
    static EdgeScorePolicy insertion(Method m);
};

/// Per-node values for the baseline methods (degree, core_number or kshell,
/// core_strength, iks entropy). Strength methods are not served here; their
/// tables come from the removal/insertion modules.
std::vector<double> baseline_scores(const Graph& g, const CoreState& cs,
                                    Method method);

/// Rank edges of G by the policy and pick c of them, taking at most one edge
/// from any KAES (same-KAES removals are interchangeable). The random method
/// draws c uniform edges and skips the dedup.
std::vector<Edge> select_critical_removals(const Graph& g, const CoreState& cs,
                                           const std::vector<double>& scores,
                                           const EdgeScorePolicy& policy,
                                           std::size_t c, std::uint64_t seed = 0);

/// Non-adjacent pairs with at least two common neighbors, sorted.
std::vector<Edge> insertion_candidate_pairs(const Graph& g);

/// Result of sequentially applying ranked insertions: edge i of `applied`
/// was the (i+1)-th accepted edge; f_after[i] is the F value (percentage of
/// nodes off their initial core number) once it was applied.
struct InsertionCampaign {
    std::vector<Edge> applied;
    std::vector<double> f_after;
};

/// Rank the candidate pairs by the policy and insert them in order, skipping
/// any edge whose both endpoints already rose above their initial core
/// number, until c edges have been applied (or candidates run out).
InsertionCampaign run_insertion_campaign(const Graph& g, const CoreState& cs,
                                         const std::vector<double>& scores,
                                         const EdgeScorePolicy& policy,
                                         std::size_t c, std::uint64_t seed = 0);

std::vector<Edge> select_critical_insertions(const Graph& g, const CoreState& cs,
                                             const std::vector<double>& scores,
                                             const EdgeScorePolicy& policy,
                                             std::size_t c,
                                             std::uint64_t seed = 0);

/// Percentage of nodes whose core number differs from `initial` after
/// applying all edges (removals or insertions) to a copy and recomputing.
double measure_F(const Graph& g, const CoreState& initial,
                 const std::vector<Edge>& edges, EdgeChange::Kind kind);

/// Influential-spreader selection: pass over the shells from the highest k
/// down, each time taking the unchosen node with the largest score in the
/// shell (ties broken randomly), until ceil(fraction*|V|) nodes are chosen.
std::vector<node_t> select_spreaders(const Graph& g, const CoreState& cs,
                                     const std::vector<double>& scores,
                                     double fraction, std::uint64_t seed);

/// Global top-score selection (kshell / core-strength style baselines).
std::vector<node_t> select_top_nodes(const std::vector<double>& scores,
                                     double fraction, std::uint64_t seed);

/// Dispatch: per-shell round robin for the strength measures and iks, global
/// ranking for kshell/core baselines, uniform sample for random.
std::vector<node_t> select_seeds(const Graph& g, const CoreState& cs,
                                 Method method, const std::vector<double>& scores,
                                 double fraction, std::uint64_t seed);

}  // namespace coreres
