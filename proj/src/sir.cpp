#include "coreres/sir.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <unordered_set>

namespace coreres {

namespace {

enum : std::uint8_t { S = 0, I = 1, R = 2 };

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

SirTrace run_sir(const Graph& g, const std::vector<node_t>& seeds,
                 const SirConfig& cfg) {
    if (seeds.empty()) throw param_error("run_sir: empty seed set");
    if (cfg.infect_prob < 0.0 || cfg.infect_prob > 1.0 ||
        cfg.recover_prob < 0.0 || cfg.recover_prob > 1.0)
        throw param_error("run_sir: probabilities must be in [0,1]");
    if (cfg.steps < 1 || cfg.runs < 1)
        throw param_error("run_sir: steps and runs must be >= 1");
    {
        std::unordered_set<node_t> uniq(seeds.begin(), seeds.end());
        if (uniq.size() != seeds.size())
            throw param_error("run_sir: duplicate seed node");
        for (node_t s : seeds)
            if (!g.valid_node(s)) throw param_error("run_sir: invalid seed node");
    }

    const std::size_t n = g.node_count();
    SirTrace trace;
    trace.per_run.assign(cfg.runs, {});
    trace.per_run_counts.assign(cfg.runs, {});

    for (int run = 0; run < cfg.runs; ++run) {
        std::mt19937_64 rng(splitmix64(cfg.seed + 0x51EDu) ^
                            splitmix64(static_cast<std::uint64_t>(run)));
        std::uniform_real_distribution<double> coin(0.0, 1.0);

        std::vector<std::uint8_t> state(n, S);
        std::vector<node_t> infected = seeds;
        for (node_t s : seeds) state[s] = I;
        std::size_t affected = seeds.size();
        std::size_t recovered = 0;

        auto& series = trace.per_run[run];
        auto& counts = trace.per_run_counts[run];
        series.reserve(cfg.steps + 1);
        counts.reserve(cfg.steps + 1);
        auto record = [&] {
            series.push_back(static_cast<double>(affected) / n);
            counts.push_back({n - affected, affected - recovered, recovered});
        };
        record();

        for (int t = 1; t <= cfg.steps; ++t) {
            std::vector<node_t> newly_infected;
            for (node_t u : infected)
                for (node_t v : g.neighbors(u))
                    if (state[v] == S && coin(rng) < cfg.infect_prob) {
                        state[v] = I;
                        newly_infected.push_back(v);
                        ++affected;
                    }
            // recovery rolls only for nodes infected before this step
            std::vector<node_t> still_infected;
            for (node_t u : infected)
                if (coin(rng) < cfg.recover_prob) {
                    state[u] = R;
                    ++recovered;
                } else {
                    still_infected.push_back(u);
                }
            still_infected.insert(still_infected.end(), newly_infected.begin(),
                                  newly_infected.end());
            infected = std::move(still_infected);
            record();
        }
    }

    trace.mean.assign(cfg.steps + 1, 0.0);
    trace.stddev.assign(cfg.steps + 1, 0.0);
    for (int t = 0; t <= cfg.steps; ++t) {
        double sum = 0.0;
        for (int run = 0; run < cfg.runs; ++run) sum += trace.per_run[run][t];
        double mean = sum / cfg.runs;
        trace.mean[t] = mean;
        double var = 0.0;
        for (int run = 0; run < cfg.runs; ++run) {
            double d = trace.per_run[run][t] - mean;
            var += d * d;
        }
        trace.stddev[t] = std::sqrt(var / cfg.runs);
    }
    return trace;
}

double default_beta(const Graph& g, std::optional<double> margin) {
    double beta_min = degree_moments(g).beta_min;
    if (margin) return std::min(1.0, beta_min * (1.0 + *margin));
    // smallest multiple of 0.01 strictly above beta_min, floored at 0.02
    double beta = (std::floor(beta_min * 100.0 + 1e-9) + 1.0) / 100.0;
    return std::min(1.0, std::max(beta, 0.02));
}

}  // namespace coreres
