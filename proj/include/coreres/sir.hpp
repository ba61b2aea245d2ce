#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "coreres/graph.hpp"

namespace coreres {

struct SirConfig {
    double infect_prob = 0.0;   // per infected-susceptible contact per step
    double recover_prob = 0.01; // per infected node per step
    int steps = 15;
    int runs = 50;
    std::uint64_t seed = 0;
};

struct SirStepCounts {
    std::size_t susceptible, infected, recovered;
};

/// Affected fraction (infected + recovered) per step, averaged over runs.
/// Index t runs 0..steps; entry 0 is the seed-set fraction.
struct SirTrace {
    std::vector<double> mean;
    std::vector<double> stddev;
    std::vector<std::vector<double>> per_run;
    std::vector<std::vector<SirStepCounts>> per_run_counts;
};

/// Discrete-time synchronous SIR. Within a step every infected node first
/// attempts to infect each susceptible neighbor, then rolls recovery; nodes
/// infected this step start acting next step.
SirTrace run_sir(const Graph& g, const std::vector<node_t>& seeds,
                 const SirConfig& cfg);

/// Infection probability a little above the epidemic threshold
/// beta_min = <k>/<k^2>. Without a margin, beta is the smallest multiple of
/// 0.01 strictly greater than beta_min, floored at 0.02; with a margin it is
/// min(1, beta_min*(1+margin)).
double default_beta(const Graph& g, std::optional<double> margin = std::nullopt);

}  // namespace coreres
