#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>

#include "doctest.h"

#include "coreres/applications.hpp"
#include "coreres/removal.hpp"
#include "support/oracles.hpp"
#include "support/test_graphs.hpp"

using namespace coreres;
namespace tg = coreres::testing;

namespace {

RemovalStrengths strengths_of(const Graph& g, const CoreState& cs) {
    return removal_strengths(
        build_removal_dependency_graph(g, cs, find_k_coronas(g, cs)));
}

}  // namespace

TEST_CASE("method name round trip and policy presets") {
    CHECK(method_from_string("rs_id") == Method::rs_id);
    CHECK(method_name(Method::is_od_star) == "is_od_star");
    CHECK_THROWS_AS(method_from_string("bogus"), param_error);

    EdgeScorePolicy rem = EdgeScorePolicy::removal(Method::rs_id);
    CHECK(rem.agg == Aggregation::sum);
    CHECK(rem.order == Order::lowest);
    CHECK(EdgeScorePolicy::removal(Method::rs_od).order == Order::highest);
    CHECK(EdgeScorePolicy::removal(Method::degree).order == Order::highest);

    EdgeScorePolicy ins = EdgeScorePolicy::insertion(Method::is_id);
    CHECK(ins.agg == Aggregation::max);
    CHECK(ins.order == Order::lowest);
    CHECK(EdgeScorePolicy::insertion(Method::core_strength).agg ==
          Aggregation::sum);

    CHECK_THROWS_AS(EdgeScorePolicy::removal(Method::iks), param_error);
}

TEST_CASE("baseline scores") {
    SUBCASE("K4 degree") {
        Graph g = tg::k4();
        auto s = baseline_scores(g, core_decompose(g), Method::degree);
        for (double v : s) CHECK(v == doctest::Approx(3.0));
    }
    SUBCASE("star core number") {
        Graph g = tg::star(5);
        auto s = baseline_scores(g, core_decompose(g), Method::core_number);
        for (double v : s) CHECK(v == doctest::Approx(1.0));
    }
    SUBCASE("csx core strength") {
        Graph g = tg::csx();
        auto s = baseline_scores(g, core_decompose(g), Method::core_strength);
        CHECK(s[tg::CSX_U] == doctest::Approx(3.0));
        CHECK(s[tg::CSX_A] == doctest::Approx(1.0));
    }
    SUBCASE("iks entropy is positive on connected graphs") {
        Graph g = tg::er_graph(30, 0.15, 3);
        auto s = baseline_scores(g, core_decompose(g), Method::iks);
        bool any = false;
        for (double v : s) any |= v > 0.0;
        CHECK(any);
    }
}

TEST_CASE("select_critical_removals") {
    SUBCASE("csx with rs_id: never an edge scored through the infinite hub") {
        Graph g = tg::csx();
        CoreState cs = core_decompose(g);
        RemovalStrengths rs = strengths_of(g, cs);
        auto picked = select_critical_removals(
            g, cs, rs.rs_id, EdgeScorePolicy::removal(Method::rs_id), 1);
        REQUIRE(picked.size() == 1);
        // (a,b) and (c,d) score 1/2+1/2, edges at u score infinity
        CHECK(picked[0] == Edge(tg::CSX_A, tg::CSX_B));
    }
    SUBCASE("random with c=|E| returns every edge") {
        Graph g = tg::csx();
        CoreState cs = core_decompose(g);
        RemovalStrengths rs = strengths_of(g, cs);
        auto picked = select_critical_removals(
            g, cs, rs.rs_id, EdgeScorePolicy::removal(Method::random),
            g.edge_count(), 5);
        CHECK(picked.size() == g.edge_count());
        std::set<Edge> uniq(picked.begin(), picked.end());
        CHECK(uniq.size() == g.edge_count());
    }
    SUBCASE("triangle: one corona, so any scored budget collapses to one edge") {
        Graph g = tg::triangle();
        CoreState cs = core_decompose(g);
        RemovalStrengths rs = strengths_of(g, cs);
        for (Method m : {Method::rs_id, Method::rs_od, Method::degree}) {
            auto picked = select_critical_removals(
                g, cs, m == Method::rs_id || m == Method::rs_od
                           ? (m == Method::rs_id ? rs.rs_id
                                                 : std::vector<double>(
                                                       rs.rs_od.begin(),
                                                       rs.rs_od.end()))
                           : baseline_scores(g, cs, m),
                EdgeScorePolicy::removal(m), 2);
            CHECK(picked.size() == 1);
        }
    }
    SUBCASE("budget above |E| is a param error") {
        Graph g = tg::triangle();
        CoreState cs = core_decompose(g);
        RemovalStrengths rs = strengths_of(g, cs);
        CHECK_THROWS_AS(
            select_critical_removals(g, cs, rs.rs_id,
                                     EdgeScorePolicy::removal(Method::rs_id), 9),
            param_error);
    }
}

TEST_CASE("no two scored removal picks share a KAES") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        Graph g = tg::er_graph(60, 0.1, 4400 + seed);
        CoreState cs = core_decompose(g);
        RemovalStrengths rs = strengths_of(g, cs);
        Vulnerability vul = find_vulnerable_and_sensitive(g, cs);
        CoronaSet coronas = find_k_coronas(g, cs);
        auto picked = select_critical_removals(
            g, cs, rs.rs_id, EdgeScorePolicy::removal(Method::rs_id),
            std::min<std::size_t>(20, g.edge_count()));
        std::set<int> used;
        for (const Edge& e : picked) {
            int cid = coronas.corona_of_edge(cs, vul, e.u, e.v);
            if (cid < 0) continue;
            CHECK(used.insert(cid).second);  // first use of this corona
        }
    }
}

TEST_CASE("insertion candidate pairs need two common neighbors") {
    SUBCASE("C4: both diagonals qualify") {
        Graph g = tg::cycle(4);
        auto pairs = insertion_candidate_pairs(g);
        CHECK(pairs == std::vector<Edge>{Edge(0, 2), Edge(1, 3)});
    }
    SUBCASE("two disjoint triangles: nothing qualifies") {
        Graph g = tg::two_triangles();
        CHECK(insertion_candidate_pairs(g).empty());
    }
}

TEST_CASE("F from sequential removal updates equals one full recomputation") {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        Graph g = tg::er_graph(60, 0.08, 8300 + seed);
        CoreState initial = core_decompose(g);
        auto edges = g.edges();
        std::mt19937_64 rng(seed);
        std::shuffle(edges.begin(), edges.end(), rng);
        edges.resize(std::min<std::size_t>(10, edges.size()));

        Graph cur = g;
        CoreState cur_cs = initial;
        for (const Edge& e : edges) {
            ChangeReport rep = remove_edge_update(cur, cur_cs, e.u, e.v);
            cur.remove_edge(e.u, e.v);
            cur_cs = std::move(rep.updated_core);
        }
        std::size_t off = 0;
        for (std::size_t u = 0; u < g.node_count(); ++u)
            if (cur_cs.core[u] != initial.core[u]) ++off;
        double f_seq = 100.0 * static_cast<double>(off) / g.node_count();
        CHECK(f_seq ==
              doctest::Approx(measure_F(g, initial, edges, EdgeChange::Kind::remove)));
    }
}

TEST_CASE("removing every edge flips exactly the nodes with positive core") {
    Graph g = tg::er_graph(50, 0.07, 61);
    CoreState cs = core_decompose(g);
    std::size_t positive = 0;
    for (int c : cs.core)
        if (c > 0) ++positive;
    CHECK(measure_F(g, cs, g.edges(), EdgeChange::Kind::remove) ==
          doctest::Approx(100.0 * static_cast<double>(positive) / g.node_count()));
}

TEST_CASE("measure_F") {
    SUBCASE("triangle loses everyone on one removal") {
        Graph g = tg::triangle();
        CoreState cs = core_decompose(g);
        CHECK(measure_F(g, cs, {Edge(0, 1)}, EdgeChange::Kind::remove) ==
              doctest::Approx(100.0));
    }
    SUBCASE("no edges, no change") {
        Graph g = tg::star(5);
        CoreState cs = core_decompose(g);
        CHECK(measure_F(g, cs, {}, EdgeChange::Kind::remove) ==
              doctest::Approx(0.0));
    }
    SUBCASE("star drops one leaf") {
        Graph g = tg::star(5);
        CoreState cs = core_decompose(g);
        CHECK(measure_F(g, cs, {Edge(0, 1)}, EdgeChange::Kind::remove) ==
              doctest::Approx(100.0 / 6.0));
    }
}

TEST_CASE("insertion campaign: skip rule, exhaustion and F bookkeeping") {
    SUBCASE("c beyond the applicable candidates returns what exists") {
        // square 0-1-2-3 plus nodes 4,5 each tied to 0 and 2; seven candidate
        // pairs, of which the last three hit the skip rule
        Graph g = tg::make_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0},
                                     {4, 0}, {4, 2}, {5, 0}, {5, 2}});
        CoreState cs = core_decompose(g);
        REQUIRE(insertion_candidate_pairs(g).size() == 7);
        std::vector<double> uniform(g.node_count(), 1.0);
        InsertionCampaign camp = run_insertion_campaign(
            g, cs, uniform, EdgeScorePolicy::insertion(Method::degree), 100);
        // lex order: (0,2) lifts nothing, (1,3) makes a K4, then (1,4) and
        // (1,5) lift the stragglers; (3,4),(3,5),(4,5) are skipped
        REQUIRE(camp.applied.size() == 4);
        CHECK(camp.applied[0] == Edge(0, 2));
        CHECK(camp.applied[1] == Edge(1, 3));
        CHECK(camp.f_after[0] == doctest::Approx(0.0));
        CHECK(camp.f_after[1] == doctest::Approx(400.0 / 6.0));
        CHECK(camp.f_after[3] == doctest::Approx(100.0));

        // budget counts applied edges only
        auto limited = select_critical_insertions(
            g, cs, uniform, EdgeScorePolicy::insertion(Method::degree), 3);
        CHECK(limited.size() == 3);
    }
    SUBCASE("empty candidate set gives an empty result") {
        Graph g = tg::two_triangles();
        CoreState cs = core_decompose(g);
        std::vector<double> uniform(g.node_count(), 1.0);
        auto picked = select_critical_insertions(
            g, cs, uniform, EdgeScorePolicy::insertion(Method::degree), 5);
        CHECK(picked.empty());
    }
    SUBCASE("incremental F equals full-recompute F") {
        for (std::uint64_t seed = 0; seed < 4; ++seed) {
            Graph g = tg::er_graph(50, 0.08, 6100 + seed);
            CoreState cs = core_decompose(g);
            std::vector<double> deg = baseline_scores(g, cs, Method::degree);
            InsertionCampaign camp = run_insertion_campaign(
                g, cs, deg, EdgeScorePolicy::insertion(Method::degree), 8);
            for (std::size_t c = 1; c <= camp.applied.size(); ++c) {
                std::vector<Edge> prefix(camp.applied.begin(),
                                         camp.applied.begin() + c);
                CHECK(camp.f_after[c - 1] ==
                      doctest::Approx(
                          measure_F(g, cs, prefix, EdgeChange::Kind::insert)));
            }
        }
    }
}

TEST_CASE("select_spreaders") {
    SUBCASE("csx with rs_od picks the hub first") {
        Graph g = tg::csx();
        CoreState cs = core_decompose(g);
        RemovalStrengths rs = strengths_of(g, cs);
        std::vector<double> od(rs.rs_od.begin(), rs.rs_od.end());
        auto seeds = select_spreaders(g, cs, od, 0.2, 1);  // ceil(1) node
        REQUIRE(seeds.size() == 1);
        CHECK(seeds[0] == tg::CSX_U);
    }
    SUBCASE("one pass takes the best of each shell, highest shell first") {
        // triangle (core 2) plus a pendant chain (core 1)
        Graph g = tg::make_graph(
            6, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 5}});
        CoreState cs = core_decompose(g);
        std::vector<double> score = {5, 1, 1, 9, 2, 1};
        auto seeds = select_spreaders(g, cs, score, 2.0 / 6.0, 3);
        REQUIRE(seeds.size() == 2);
        CHECK(cs.core[seeds[0]] == 2);  // highest shell first
        CHECK(seeds[0] == 0);           // best score in shell 2
        CHECK(seeds[1] == 3);           // best score in shell 1
    }
    SUBCASE("spreader list size is exactly ceil(fraction * |V|)") {
        Graph g = tg::er_graph(41, 0.1, 12);
        CoreState cs = core_decompose(g);
        std::vector<double> uniform(g.node_count(), 1.0);
        CHECK(select_spreaders(g, cs, uniform, 0.2, 7).size() == 9);  // ceil(8.2)
        CHECK(select_spreaders(g, cs, uniform, 1.0, 7).size() == 41);
    }
    SUBCASE("all-equal scores: selection is a seeded random choice per shell") {
        Graph g = tg::k4();
        CoreState cs = core_decompose(g);
        std::vector<double> uniform(4, 1.0);
        auto a = select_spreaders(g, cs, uniform, 0.5, 42);
        auto b = select_spreaders(g, cs, uniform, 0.5, 42);
        CHECK(a == b);  // deterministic under one seed
        std::set<node_t> distinct;
        for (std::uint64_t s = 0; s < 16; ++s)
            distinct.insert(select_spreaders(g, cs, uniform, 0.25, s)[0]);
        CHECK(distinct.size() > 1);  // ties genuinely vary across seeds
    }
}

TEST_CASE("select_seeds dispatches baselines to the right procedure") {
    Graph g = tg::er_graph(50, 0.1, 9);
    CoreState cs = core_decompose(g);

    // kshell: global by core number
    auto kshell = select_seeds(g, cs, Method::kshell,
                               baseline_scores(g, cs, Method::kshell), 0.1, 3);
    int worst = cs.max_core;
    for (node_t u : kshell) worst = std::min(worst, cs.core[u]);
    for (node_t u = 0; u < static_cast<node_t>(g.node_count()); ++u) {
        bool in = std::find(kshell.begin(), kshell.end(), u) != kshell.end();
        if (!in) CHECK(cs.core[u] <= worst);
    }

    // random: right size, seed-dependent
    auto r1 = select_seeds(g, cs, Method::random, {}, 0.1, 1);
    auto r2 = select_seeds(g, cs, Method::random, {}, 0.1, 2);
    CHECK(r1.size() == 5);
    CHECK(r1 != r2);
}

TEST_CASE("F of rs_id removals beats random on average (smoke)") {
    int wins = 0, losses = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Graph g = tg::er_graph(80, 0.08, 7900 + seed);
        CoreState cs = core_decompose(g);
        RemovalStrengths rs = strengths_of(g, cs);
        std::size_t budget = std::max<std::size_t>(1, g.edge_count() / 20);
        auto targeted = select_critical_removals(
            g, cs, rs.rs_id, EdgeScorePolicy::removal(Method::rs_id), budget);
        double f_t = measure_F(g, cs, targeted, EdgeChange::Kind::remove);
        double f_r = 0.0;
        for (std::uint64_t draw = 0; draw < 3; ++draw) {
            auto rnd = select_critical_removals(
                g, cs, rs.rs_id, EdgeScorePolicy::removal(Method::random), budget,
                seed * 3 + draw);
            f_r += measure_F(g, cs, rnd, EdgeChange::Kind::remove);
        }
        f_r /= 3.0;
        if (f_t > f_r) ++wins;
        else if (f_t < f_r) ++losses;
    }
    CHECK(wins > losses);
}
