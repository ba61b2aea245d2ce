// coreres: node-based core resilience toolkit
//
// Subcommands: decompose, strengths, benchmark, critical-edges, spreaders,
// rerun. Every run writes its data files plus a manifest.json that `rerun`
// can replay byte-for-byte (wall-clock timings aside).

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "coreres/applications.hpp"
#include "coreres/bench.hpp"
#include "coreres/core.hpp"
#include "coreres/graph.hpp"
#include "coreres/incremental.hpp"
#include "coreres/insertion.hpp"
#include "coreres/io.hpp"
#include "coreres/parallel.hpp"
#include "coreres/removal.hpp"
#include "coreres/sir.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace coreres;

int run_cli(int argc, const char** argv);

namespace {

constexpr const char* kVersion = "0.1.0";

// exit codes: parse=2, param=3, internal=4, io=5
constexpr int kExitParse = 2;
constexpr int kExitParam = 3;
constexpr int kExitInternal = 4;
constexpr int kExitIo = 5;

struct Options {
    std::string graph;
    std::string mode = "removal";
    int b = 5;
    int trials = 10;
    std::uint64_t seed = 0;
    std::string budgets;  // comma list; empty = auto sweep
    std::string methods;  // comma list; empty = per-command default
    double fraction = 0.2;
    double beta = -1.0;  // <0 = auto from beta_min
    double recover_prob = 0.01;
    int steps = 15;
    int runs = 50;
    bool strict_parse = false;
    unsigned workers = 0;  // 0 = available parallelism
    std::string out_dir = ".";
    int bench_reps = 3;
};

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    }
};

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::vector<Method> parse_methods(const std::string& list,
                                  const std::string& fallback) {
    std::vector<Method> out;
    for (const std::string& name : split_list(list.empty() ? fallback : list))
        out.push_back(method_from_string(name));
    if (out.empty()) throw param_error("no methods given");
    return out;
}

// budget sweep: 50,100,..,1000 on big graphs, proportionally smaller steps on
// small ones, always capped at |E|
std::vector<std::size_t> default_budgets(std::size_t edge_count) {
    std::size_t step =
        edge_count >= 2000 ? 50 : std::max<std::size_t>(1, edge_count / 40);
    std::vector<std::size_t> out;
    for (int i = 1; i <= 20; ++i) {
        std::size_t c = std::min(step * i, edge_count);
        if (out.empty() || c != out.back()) out.push_back(c);
    }
    return out;
}

std::vector<std::size_t> parse_budgets(const std::string& list,
                                       std::size_t edge_count) {
    if (list.empty()) return default_budgets(edge_count);
    std::vector<std::size_t> out;
    for (const std::string& tok : split_list(list)) {
        long long v = 0;
        try {
            v = std::stoll(tok);
        } catch (...) {
            throw param_error("bad budget: " + tok);
        }
        if (v < 1) throw param_error("budget must be positive: " + tok);
        out.push_back(static_cast<std::size_t>(v));
    }
    return out;
}

std::uint64_t method_stream_seed(std::uint64_t seed, Method m) {
    return seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(m) + 1;
}

Graph load_graph(const Options& opt, json& manifest) {
    std::size_t skipped = 0;
    Graph g = load_edge_list_file(opt.graph, opt.strict_parse, &skipped);
    if (skipped)
        std::cerr << "warning: skipped " << skipped << " malformed line(s)\n";
    manifest["graph"] = opt.graph;
    manifest["skipped_lines"] = skipped;
    return g;
}

std::ofstream open_out(const fs::path& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw io_error("cannot write " + path.string());
    return os;
}

json params_json(const Options& opt) {
    json j;
    j["mode"] = opt.mode;
    j["b"] = opt.b;
    j["trials"] = opt.trials;
    j["seed"] = opt.seed;
    j["budgets"] = opt.budgets;
    j["methods"] = opt.methods;
    j["fraction"] = opt.fraction;
    j["beta"] = opt.beta;
    j["recover_prob"] = opt.recover_prob;
    j["steps"] = opt.steps;
    j["runs"] = opt.runs;
    j["strict_parse"] = opt.strict_parse;
    j["workers"] = opt.workers;
    return j;
}

// canonical argv stored in the manifest, sufficient to reproduce the run;
// only flags the subcommand actually accepts are emitted
std::vector<std::string> rerun_argv(const std::string& command,
                                    const Options& opt) {
    std::vector<std::string> v{command, "--graph", opt.graph};
    auto add = [&](const char* flag, const std::string& val) {
        v.push_back(flag);
        v.push_back(val);
    };
    bool has_mode = command == "strengths" || command == "benchmark" ||
                    command == "critical-edges";
    bool has_insertion_params = command != "decompose";
    if (has_mode) add("--mode", opt.mode);
    if (has_insertion_params) {
        add("--b", std::to_string(opt.b));
        add("--trials", std::to_string(opt.trials));
    }
    add("--seed", std::to_string(opt.seed));
    if (command == "critical-edges") {
        if (!opt.budgets.empty()) add("--budgets", opt.budgets);
        if (!opt.methods.empty()) add("--methods", opt.methods);
    }
    if (command == "spreaders") {
        if (!opt.methods.empty()) add("--methods", opt.methods);
        add("--fraction", fmt_value(opt.fraction));
        if (opt.beta >= 0.0) add("--beta", fmt_value(opt.beta));
        add("--recover-prob", fmt_value(opt.recover_prob));
        add("--steps", std::to_string(opt.steps));
        add("--runs", std::to_string(opt.runs));
    }
    if (command == "benchmark") add("--reps", std::to_string(opt.bench_reps));
    if (opt.strict_parse) v.push_back("--strict-parse");
    add("--workers", std::to_string(opt.workers));
    add("--out-dir", opt.out_dir);
    return v;
}

void write_manifest(const Options& opt, const std::string& command,
                    json manifest, double total_seconds) {
    manifest["command"] = command;
    manifest["version"] = kVersion;
    manifest["argv"] = rerun_argv(command, opt);
    manifest["timings"]["total_seconds"] = total_seconds;
    std::ofstream os = open_out(fs::path(opt.out_dir) / "manifest.json");
    os << manifest.dump(2) << '\n';
}

int cmd_decompose(const Options& opt) {
    Timer timer;
    json manifest;
    manifest["params"] = params_json(opt);
    Graph g = load_graph(opt, manifest);
    CoreState cs = core_decompose(g);
    if (!h_index_check(g, cs))
        throw internal_error("h-index self-check failed after decomposition");
    DegreeMoments m = degree_moments(g);

    {
        std::ofstream os = open_out(fs::path(opt.out_dir) / "cores.csv");
        write_core_csv(os, g, cs);
    }

    json summary;
    summary["nodes"] = g.node_count();
    summary["edges"] = g.edge_count();
    summary["max_core"] = cs.max_core;
    summary["mean_degree"] = m.mean_degree;
    summary["mean_square_degree"] = m.mean_square_degree;
    summary["beta_min"] = m.beta_min;
    json hist = json::object();
    for (int k = 0; k <= cs.max_core; ++k)
        if (!cs.shells[k].empty()) hist[std::to_string(k)] = cs.shells[k].size();
    summary["shell_sizes"] = hist;
    {
        std::ofstream os = open_out(fs::path(opt.out_dir) / "summary.json");
        os << summary.dump(2) << '\n';
    }
    std::cout << "|V|=" << g.node_count() << " |E|=" << g.edge_count()
              << " max_k=" << cs.max_core << " <k>=" << fmt_value(m.mean_degree)
              << " <k^2>=" << fmt_value(m.mean_square_degree)
              << " beta_min=" << fmt_value(m.beta_min) << '\n';

    manifest["outputs"] = {"cores.csv", "summary.json"};
    write_manifest(opt, "decompose", manifest, timer.seconds());
    return 0;
}

int cmd_strengths(const Options& opt) {
    Timer timer;
    json manifest;
    manifest["params"] = params_json(opt);
    Graph g = load_graph(opt, manifest);
    CoreState cs = core_decompose(g);

    if (opt.mode == "removal") {
        CoronaSet coronas = find_k_coronas(g, cs);
        Digraph rd = build_removal_dependency_graph(g, cs, coronas);
        RemovalStrengths rs = removal_strengths(rd);
        std::vector<int> cs_values = core_strength(g, cs);
        {
            std::ofstream os =
                open_out(fs::path(opt.out_dir) / "removal_strengths.csv");
            write_removal_strengths_csv(os, g, cs, cs_values, rs);
        }
        {
            std::ofstream os = open_out(fs::path(opt.out_dir) / "grd_edges.txt");
            write_digraph_edges(os, g, rd);
        }
        manifest["coronas"] = coronas.coronas.size();
        manifest["gain_pct"] =
            g.edge_count()
                ? 100.0 * (1.0 - static_cast<double>(coronas.coronas.size()) /
                                     static_cast<double>(g.edge_count()))
                : 0.0;
        manifest["outputs"] = {"removal_strengths.csv", "grd_edges.txt"};
    } else if (opt.mode == "insertion") {
        InsertionStrengths is =
            insertion_strengths(g, cs, opt.b, opt.trials, opt.seed);
        {
            std::ofstream os =
                open_out(fs::path(opt.out_dir) / "insertion_strengths.csv");
            write_insertion_strengths_csv(os, g, is);
        }
        // candidate/dependency graphs of the first trial, for inspection
        InsertionCandidateGraph ic = build_candidate_graph(g, cs, opt.b, opt.seed);
        InsertionDependencyGraph id = build_insertion_dependency_graph(g, cs, ic);
        {
            std::ofstream os = open_out(fs::path(opt.out_dir) / "gic_edges.txt");
            write_candidate_edges(os, g, ic);
        }
        {
            std::ofstream os = open_out(fs::path(opt.out_dir) / "gid_edges.txt");
            write_digraph_edges(os, g, id.dg);
        }
        manifest["rule_resolved"] =
            is.stats.higher_core_fill + is.stats.equal_core_pair + is.stats.neighbor_assist;
        manifest["fallbacks"] = is.stats.fallback;
        manifest["fallback_rate"] = is.stats.fallback_rate();
        manifest["outputs"] = {"insertion_strengths.csv", "gic_edges.txt",
                               "gid_edges.txt"};
    } else {
        throw param_error("mode must be removal or insertion");
    }

    write_manifest(opt, "strengths", manifest, timer.seconds());
    return 0;
}

int cmd_benchmark(const Options& opt) {
    Timer timer;
    json manifest;
    manifest["params"] = params_json(opt);
    Graph g = load_graph(opt, manifest);
    CoreState cs = core_decompose(g);
    json report;

    if (opt.mode == "removal") {
        RemovalBench r = benchmark_removal(g, cs, opt.bench_reps);
        if (!r.graphs_match)
            throw internal_error("RSC and naive dependency graphs disagree");
        report["edges_evaluated_naive"] = r.edges;
        report["edges_evaluated_rsc"] = r.coronas;
        report["gain_pct"] = r.gain_pct;
        report["naive_seconds"] = r.naive_seconds;
        report["rsc_seconds"] = r.rsc_seconds;
        report["speedup"] = r.speedup;
        std::cout << "removal: naive " << r.edges << " evals, RSC " << r.coronas
                  << " (gain " << fmt_value(r.gain_pct) << "%), naive "
                  << fmt_value(r.naive_seconds) << "s vs RSC "
                  << fmt_value(r.rsc_seconds) << "s (speedup "
                  << fmt_value(r.speedup) << "x)\n";
    } else if (opt.mode == "insertion") {
        InsertionBench r =
            benchmark_insertion(g, cs, opt.b, opt.seed, opt.bench_reps);
        if (!r.graphs_match)
            throw internal_error("ISC and naive dependency graphs disagree");
        report["candidates"] = r.candidates;
        report["rule_resolved"] = r.rule_resolved;
        report["fallbacks"] = r.fallbacks;
        report["naive_seconds"] = r.naive_seconds;
        report["isc_seconds"] = r.isc_seconds;
        report["speedup"] = r.speedup;
        std::cout << "insertion: " << r.candidates << " candidates, "
                  << r.rule_resolved << " rule-resolved / " << r.fallbacks
                  << " fallbacks, naive " << fmt_value(r.naive_seconds)
                  << "s vs ISC " << fmt_value(r.isc_seconds) << "s (speedup "
                  << fmt_value(r.speedup) << "x)\n";
    } else {
        throw param_error("mode must be removal or insertion");
    }

    manifest["report"] = report;
    manifest["outputs"] = {"benchmark.json"};
    {
        std::ofstream os = open_out(fs::path(opt.out_dir) / "benchmark.json");
        os << report.dump(2) << '\n';
    }
    write_manifest(opt, "benchmark", manifest, timer.seconds());
    return 0;
}

// per-method node scores for edge selection and seeding
std::vector<double> scores_for_method(const Graph& g, const CoreState& cs,
                                      Method m, const Options& opt) {
    switch (m) {
        case Method::rs_id:
        case Method::rs_od: {
            RemovalStrengths rs = removal_strengths(
                build_removal_dependency_graph(g, cs, find_k_coronas(g, cs)));
            if (m == Method::rs_id) return rs.rs_id;
            return std::vector<double>(rs.rs_od.begin(), rs.rs_od.end());
        }
        case Method::is_id:
        case Method::is_od:
        case Method::is_id_star:
        case Method::is_od_star: {
            InsertionStrengths is =
                insertion_strengths(g, cs, opt.b, opt.trials, opt.seed);
            if (m == Method::is_id) return is.is_id;
            if (m == Method::is_od) return is.is_od;
            if (m == Method::is_id_star) return is.is_id_star;
            return is.is_od_star;
        }
        case Method::random:
            return std::vector<double>(g.node_count(), 0.0);
        default:
            return baseline_scores(g, cs, m);
    }
}

int cmd_critical_edges(const Options& opt) {
    Timer timer;
    json manifest;
    manifest["params"] = params_json(opt);
    Graph g = load_graph(opt, manifest);
    CoreState cs = core_decompose(g);

    bool removal_kind = opt.mode == "removal";
    if (!removal_kind && opt.mode != "insertion")
        throw param_error("mode must be removal or insertion");

    std::vector<Method> methods = parse_methods(
        opt.methods, removal_kind
                         ? "rs_id,rs_od,random,degree,core_number,core_strength"
                         : "is_id,is_od,is_id_star,is_od_star,random,degree,"
                           "core_number,core_strength");
    std::vector<std::size_t> budgets = parse_budgets(opt.budgets, g.edge_count());
    if (removal_kind)
        for (std::size_t c : budgets)
            if (c > g.edge_count())
                throw param_error("budget exceeds |E|: " + std::to_string(c));

    unsigned workers = opt.workers ? opt.workers : default_workers();
    const int random_draws = 10;  // F of the random baseline is an average

    std::vector<FSeries> series(methods.size());
    parallel_for(methods.size(), workers, [&](std::size_t mi) {
        Method m = methods[mi];
        std::uint64_t mseed = method_stream_seed(opt.seed, m);
        FSeries& fs = series[mi];
        fs.method = method_name(m);
        fs.budgets = budgets;
        std::vector<double> scores = scores_for_method(g, cs, m, opt);
        std::size_t max_c = *std::max_element(budgets.begin(), budgets.end());

        if (removal_kind) {
            EdgeScorePolicy policy = EdgeScorePolicy::removal(m);
            if (m == Method::random) {
                for (std::size_t c : budgets) {
                    double acc = 0.0;
                    for (int d = 0; d < random_draws; ++d) {
                        auto edges = select_critical_removals(g, cs, scores,
                                                              policy, c, mseed + d);
                        acc += measure_F(g, cs, edges, EdgeChange::Kind::remove);
                    }
                    fs.F.push_back(acc / random_draws);
                }
            } else {
                auto ranked =
                    select_critical_removals(g, cs, scores, policy, max_c, mseed);
                for (std::size_t c : budgets) {
                    std::vector<Edge> prefix(
                        ranked.begin(),
               	        ranked.begin() + std::min(c, ranked.size()));
                    fs.F.push_back(
                        measure_F(g, cs, prefix, EdgeChange::Kind::remove));
                }
            }
        } else {
            EdgeScorePolicy policy = EdgeScorePolicy::insertion(m);
            if (m == Method::random) {
                for (std::size_t c : budgets) {
                    double acc = 0.0;
                    for (int d = 0; d < random_draws; ++d) {
                        InsertionCampaign camp = run_insertion_campaign(
                            g, cs, scores, policy, c, mseed + d);
                        acc += camp.applied.empty() ? 0.0 : camp.f_after.back();
                    }
                    fs.F.push_back(acc / random_draws);
                }
            } else {
                InsertionCampaign camp =
                    run_insertion_campaign(g, cs, scores, policy, max_c, mseed);
                for (std::size_t c : budgets) {
                    if (camp.applied.empty()) {
                        fs.F.push_back(0.0);
                        continue;
                    }
                    std::size_t idx = std::min(c, camp.applied.size()) - 1;
                    fs.F.push_back(camp.f_after[idx]);
                }
            }
        }
    });

    {
        std::ofstream os = open_out(fs::path(opt.out_dir) / "critical_edges.csv");
        write_f_csv(os, series);
    }
    manifest["outputs"] = {"critical_edges.csv"};
    write_manifest(opt, "critical-edges", manifest, timer.seconds());
    return 0;
}

int cmd_spreaders(const Options& opt) {
    Timer timer;
    json manifest;
    manifest["params"] = params_json(opt);
    Graph g = load_graph(opt, manifest);
    CoreState cs = core_decompose(g);

    std::vector<Method> methods = parse_methods(
        opt.methods, "rs_id,rs_od,is_id,is_od,kshell,iks,core_strength,random");
    double beta = opt.beta >= 0.0 ? opt.beta : default_beta(g);
    manifest["beta"] = beta;

    unsigned workers = opt.workers ? opt.workers : default_workers();
    std::vector<TraceSeries> traces(methods.size());
    std::vector<std::pair<std::string, std::vector<node_t>>> seed_sets(
        methods.size());

    parallel_for(methods.size(), workers, [&](std::size_t mi) {
        Method m = methods[mi];
        std::uint64_t mseed = method_stream_seed(opt.seed, m);
        std::vector<double> scores = scores_for_method(g, cs, m, opt);
        std::vector<node_t> seeds =
            select_seeds(g, cs, m, scores, opt.fraction, mseed);

        SirConfig cfg;
        cfg.infect_prob = beta;
        cfg.recover_prob = opt.recover_prob;
        cfg.steps = opt.steps;
        cfg.runs = opt.runs;
        cfg.seed = opt.seed;  // shared SIR randomness across methods
        traces[mi] = {method_name(m), run_sir(g, seeds, cfg)};
        seed_sets[mi] = {method_name(m), std::move(seeds)};
    });

    {
        std::ofstream os = open_out(fs::path(opt.out_dir) / "sir.csv");
        write_sir_csv(os, traces);
    }
    {
        std::ofstream os = open_out(fs::path(opt.out_dir) / "seeds.csv");
        write_seeds_csv(os, g, seed_sets);
    }
    manifest["outputs"] = {"sir.csv", "seeds.csv"};
    write_manifest(opt, "spreaders", manifest, timer.seconds());
    return 0;
}

int cmd_rerun(const std::string& manifest_path, const std::string& out_dir) {
    std::ifstream in(manifest_path);
    if (!in) throw io_error("cannot open manifest: " + manifest_path);
    json manifest;
    try {
        in >> manifest;
    } catch (const json::exception& e) {
        throw parse_error(std::string("bad manifest: ") + e.what());
    }
    if (!manifest.contains("argv"))
        throw parse_error("manifest lacks an argv record");

    std::vector<std::string> argv =
        manifest["argv"].get<std::vector<std::string>>();
    if (!out_dir.empty()) {
        for (std::size_t i = 0; i + 1 < argv.size(); ++i)
            if (argv[i] == "--out-dir") argv[i + 1] = out_dir;
    }

    std::vector<const char*> cargv;
    cargv.push_back("coreres");
    for (const std::string& a : argv) cargv.push_back(a.c_str());
    return run_cli(static_cast<int>(cargv.size()), cargv.data());
}

}  // namespace

int run_cli(int argc, const char** argv) {
    CLI::App app{"node-based core resilience toolkit"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    Options opt;
    std::string rerun_manifest, rerun_out;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--graph", opt.graph, "edge-list file")
            ->envname("CORERES_GRAPH")
            ->required();
        sub->add_flag("--strict-parse", opt.strict_parse,
                      "fail on malformed lines instead of skipping them")
            ->envname("CORERES_STRICT_PARSE");
        sub->add_option("--seed", opt.seed, "random seed")
            ->envname("CORERES_SEED");
        sub->add_option("--out-dir", opt.out_dir, "output directory")
            ->envname("CORERES_OUT_DIR");
        sub->add_option("--workers", opt.workers,
                        "worker pool size (0 = available parallelism)")
            ->envname("CORERES_WORKERS");
    };
    auto add_mode = [&](CLI::App* sub) {
        sub->add_option("--mode", opt.mode, "removal or insertion")
            ->envname("CORERES_MODE");
    };
    auto add_insertion_params = [&](CLI::App* sub) {
        sub->add_option("--b", opt.b, "candidate edges per node")
            ->envname("CORERES_B");
        sub->add_option("--trials", opt.trials, "insertion-strength trials")
            ->envname("CORERES_TRIALS");
    };

    CLI::App* dec =
        app.add_subcommand("decompose", "core decomposition + summary");
    add_common(dec);

    CLI::App* str = app.add_subcommand(
        "strengths", "removal (RSC) or insertion (ISC) strength tables");
    add_common(str);
    add_mode(str);
    add_insertion_params(str);

    CLI::App* ben = app.add_subcommand(
        "benchmark", "naive vs RSC/ISC evaluation counts and wall clock");
    add_common(ben);
    add_mode(ben);
    add_insertion_params(ben);
    ben->add_option("--reps", opt.bench_reps, "timing repetitions (best-of)")
        ->envname("CORERES_REPS");

    CLI::App* cri = app.add_subcommand(
        "critical-edges", "budgeted critical-edge selection, F vs budget");
    add_common(cri);
    add_mode(cri);
    add_insertion_params(cri);
    cri->add_option("--budgets", opt.budgets, "comma list (default: auto sweep)")
        ->envname("CORERES_BUDGETS");
    cri->add_option("--methods", opt.methods, "comma list of scoring methods")
        ->envname("CORERES_METHODS");

    CLI::App* spr = app.add_subcommand(
        "spreaders", "influential-spreader seeding evaluated under SIR");
    add_common(spr);
    add_insertion_params(spr);
    spr->add_option("--methods", opt.methods, "comma list of seeding methods")
        ->envname("CORERES_METHODS");
    spr->add_option("--fraction", opt.fraction, "seed-set fraction of |V|")
        ->envname("CORERES_FRACTION");
    spr->add_option("--beta", opt.beta,
                    "infection probability (default: auto from beta_min)")
        ->envname("CORERES_BETA");
    spr->add_option("--recover-prob", opt.recover_prob, "recovery probability")
        ->envname("CORERES_RECOVER_PROB");
    spr->add_option("--steps", opt.steps, "SIR steps")->envname("CORERES_STEPS");
    spr->add_option("--runs", opt.runs, "SIR runs to average")
        ->envname("CORERES_RUNS");

    CLI::App* rer = app.add_subcommand("rerun", "replay a manifest.json");
    rer->add_option("manifest", rerun_manifest, "manifest file")->required();
    rer->add_option("--out-dir", rerun_out, "override the output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParam;
    }

    try {
        if (rer->parsed()) return cmd_rerun(rerun_manifest, rerun_out);
        fs::create_directories(opt.out_dir);
        if (dec->parsed()) return cmd_decompose(opt);
        if (str->parsed()) return cmd_strengths(opt);
        if (ben->parsed()) return cmd_benchmark(opt);
        if (cri->parsed()) return cmd_critical_edges(opt);
        if (spr->parsed()) return cmd_spreaders(opt);
        throw param_error("no command given");
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const param_error& e) {
        std::cerr << "parameter error: " << e.what() << '\n';
        return kExitParam;
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    } catch (const io_error& e) {
        std::cerr << "io error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}

int main(int argc, char** argv) {
    return run_cli(argc, const_cast<const char**>(argv));
}
