#include <cmath>
#include <cstdint>
#include <set>

#include "doctest.h"

#include "coreres/removal.hpp"
#include "support/test_graphs.hpp"

using namespace coreres;
namespace tg = coreres::testing;

TEST_CASE("core_strength on the named graphs") {
    SUBCASE("csx") {
        Graph g = tg::csx();
        auto cs_val = core_strength(g, core_decompose(g));
        CHECK(cs_val[tg::CSX_U] == 3);  // 4 - 2 + 1
        // the other four are vulnerable, i.e. exactly strength 1 (2 - 2 + 1)
        for (node_t u : {tg::CSX_A, tg::CSX_B, tg::CSX_C, tg::CSX_D})
            CHECK(cs_val[u] == 1);
    }
    SUBCASE("K4: cliques sit at strength 1") {
        Graph g = tg::k4();
        auto cs_val = core_strength(g, core_decompose(g));
        for (int v : cs_val) CHECK(v == 1);
    }
    SUBCASE("star center") {
        Graph g = tg::star(5);
        auto cs_val = core_strength(g, core_decompose(g));
        CHECK(cs_val[0] == 5);  // 5 - 1 + 1
    }
}

TEST_CASE("vulnerable nodes and sensitive edges") {
    SUBCASE("triangle: everyone is vulnerable, every edge sensitive") {
        Graph g = tg::triangle();
        Vulnerability vul = find_vulnerable_and_sensitive(g, core_decompose(g));
        for (node_t u = 0; u < 3; ++u) {
            CHECK(vul.vulnerable[u]);
            CHECK(vul.sensitive_partners[u].size() == 2);
        }
    }
    SUBCASE("csx: the hub is safe, the rest are not") {
        Graph g = tg::csx();
        Vulnerability vul = find_vulnerable_and_sensitive(g, core_decompose(g));
        CHECK_FALSE(vul.vulnerable[tg::CSX_U]);
        for (node_t u : {tg::CSX_A, tg::CSX_B, tg::CSX_C, tg::CSX_D})
            CHECK(vul.vulnerable[u]);
    }
    SUBCASE("star: leaves vulnerable, center not") {
        Graph g = tg::star(5);
        Vulnerability vul = find_vulnerable_and_sensitive(g, core_decompose(g));
        CHECK_FALSE(vul.vulnerable[0]);
        for (node_t u = 1; u <= 5; ++u) CHECK(vul.vulnerable[u]);
    }
}

TEST_CASE("find_k_coronas on the named graphs") {
    SUBCASE("triangle: one 2-corona covering everything") {
        Graph g = tg::triangle();
        CoronaSet set = find_k_coronas(g, core_decompose(g));
        REQUIRE(set.coronas.size() == 1);
        const Corona& c = set.coronas[0];
        CHECK(c.k == 2);
        CHECK(c.members.size() == 3);
        CHECK(c.kaes.size() == 3);
        CHECK(c.ccn == std::vector<node_t>{0, 1, 2});
    }
    SUBCASE("csx: coronas {a,b} and {c,d}") {
        Graph g = tg::csx();
        CoronaSet set = find_k_coronas(g, core_decompose(g));
        REQUIRE(set.coronas.size() == 2);
        const Corona& ab = set.coronas[set.corona_of_node[tg::CSX_A]];
        CHECK(ab.members == std::vector<node_t>{tg::CSX_A, tg::CSX_B});
        CHECK(ab.kaes == std::vector<Edge>{Edge(tg::CSX_U, tg::CSX_A),
                                           Edge(tg::CSX_U, tg::CSX_B),
                                           Edge(tg::CSX_A, tg::CSX_B)});
        CHECK(ab.ccn == std::vector<node_t>{tg::CSX_A, tg::CSX_B});
        CHECK(set.corona_of_node[tg::CSX_U] == -1);
    }
    SUBCASE("K4: one 3-corona with all six edges") {
        Graph g = tg::k4();
        CoronaSet set = find_k_coronas(g, core_decompose(g));
        REQUIRE(set.coronas.size() == 1);
        CHECK(set.coronas[0].members.size() == 4);
        CHECK(set.coronas[0].kaes.size() == 6);
        CHECK(set.coronas[0].ccn.size() == 4);
    }
}

TEST_CASE("corona structure invariants on random graphs") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        Graph g = tg::er_graph(60, 0.1, 3200 + seed);
        CoreState cs = core_decompose(g);
        Vulnerability vul = find_vulnerable_and_sensitive(g, cs);
        CoronaSet set = find_k_coronas(g, cs);
        for (const Corona& c : set.coronas) {
            CHECK_FALSE(c.ccn.empty());  // a sensitive-edge removal always drops someone
            std::set<Edge> kaes_expect;
            for (node_t u : c.members) {
                CHECK(vul.vulnerable[u]);
                CHECK(cs.core[u] == c.k);
                for (node_t v : vul.sensitive_partners[u])
                    kaes_expect.insert(Edge(u, v));
            }
            CHECK(std::set<Edge>(c.kaes.begin(), c.kaes.end()) == kaes_expect);
        }
    }
}

TEST_CASE("removal dependency graph on the named graphs") {
    SUBCASE("triangle: all six directed edges") {
        Graph g = tg::triangle();
        CoreState cs = core_decompose(g);
        Digraph rd = build_removal_dependency_graph(g, cs, find_k_coronas(g, cs));
        CHECK(rd.edge_count() == 6);
    }
    SUBCASE("csx: hub feeds everyone, nothing feeds the hub") {
        Graph g = tg::csx();
        CoreState cs = core_decompose(g);
        Digraph rd = build_removal_dependency_graph(g, cs, find_k_coronas(g, cs));
        auto expect = std::vector<std::pair<node_t, node_t>>{
            {tg::CSX_U, tg::CSX_A}, {tg::CSX_U, tg::CSX_B}, {tg::CSX_U, tg::CSX_C},
            {tg::CSX_U, tg::CSX_D}, {tg::CSX_A, tg::CSX_B}, {tg::CSX_B, tg::CSX_A},
            {tg::CSX_C, tg::CSX_D}, {tg::CSX_D, tg::CSX_C}};
        std::sort(expect.begin(), expect.end());
        CHECK(rd.edges_sorted() == expect);
        CHECK(rd.in_degree(tg::CSX_U) == 0);
    }
    SUBCASE("star: center -> each leaf only") {
        Graph g = tg::star(5);
        CoreState cs = core_decompose(g);
        Digraph rd = build_removal_dependency_graph(g, cs, find_k_coronas(g, cs));
        CHECK(rd.out_degree(0) == 5);
        CHECK(rd.in_degree(0) == 0);
        for (node_t leaf = 1; leaf <= 5; ++leaf) {
            CHECK(rd.in_degree(leaf) == 1);
            CHECK(rd.out_degree(leaf) == 0);
        }
    }
}

TEST_CASE("RSC equals the per-edge oracle construction on random graphs") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        for (double p : {0.05, 0.1, 0.3}) {
            Graph g = tg::er_graph(50, p, 100 + seed * 13 + static_cast<int>(p * 10));
            CoreState cs = core_decompose(g);
            Digraph rsc = build_removal_dependency_graph(g, cs, find_k_coronas(g, cs));
            Digraph naive = build_removal_dependency_graph_naive(g, cs);
            CHECK(rsc.same_edges(naive));
        }
    }
}

TEST_CASE("removal strengths from the dependency graph") {
    SUBCASE("triangle: rs_id = 1/2, rs_od = 2 everywhere") {
        Graph g = tg::triangle();
        CoreState cs = core_decompose(g);
        RemovalStrengths rs =
            removal_strengths(build_removal_dependency_graph(g, cs, find_k_coronas(g, cs)));
        for (node_t u = 0; u < 3; ++u) {
            CHECK(rs.rs_id[u] == doctest::Approx(0.5));
            CHECK(rs.rs_od[u] == 2);
        }
    }
    SUBCASE("csx: the hub is infinitely resilient") {
        Graph g = tg::csx();
        CoreState cs = core_decompose(g);
        RemovalStrengths rs =
            removal_strengths(build_removal_dependency_graph(g, cs, find_k_coronas(g, cs)));
        CHECK(std::isinf(rs.rs_id[tg::CSX_U]));
        CHECK(rs.rs_od[tg::CSX_U] == 4);
        CHECK(rs.rs_id[tg::CSX_A] == doctest::Approx(0.5));
    }
    SUBCASE("star") {
        Graph g = tg::star(5);
        CoreState cs = core_decompose(g);
        RemovalStrengths rs =
            removal_strengths(build_removal_dependency_graph(g, cs, find_k_coronas(g, cs)));
        CHECK(rs.rs_od[0] == 5);
        CHECK(rs.rs_id[1] == doctest::Approx(1.0));
        CHECK(rs.rs_od[1] == 0);
    }
}

// The removal structure claims as executable properties, checked through the
// full-recompute oracle on the random suite.
TEST_CASE("sensitive edges demote, KAES removals are interchangeable, others inert") {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        Graph g = tg::er_graph(40, 0.12, 5400 + seed);
        CoreState cs = core_decompose(g);
        Vulnerability vul = find_vulnerable_and_sensitive(g, cs);
        CoronaSet set = find_k_coronas(g, cs);

        // removing a sensitive edge decrements its vulnerable node
        for (node_t u = 0; u < static_cast<node_t>(g.node_count()); ++u) {
            if (!vul.vulnerable[u]) continue;
            for (node_t v : vul.sensitive_partners[u]) {
                Graph g2 = g;
                g2.remove_edge(u, v);
                CHECK(core_decompose(g2).core[u] == cs.core[u] - 1);
            }
        }

        std::set<Edge> all_kaes;
        for (const Corona& c : set.coronas) {
            // every removal within one KAES yields one core vector
            std::vector<int> reference;
            for (const Edge& e : c.kaes) {
                all_kaes.insert(e);
                Graph g2 = g;
                g2.remove_edge(e.u, e.v);
                std::vector<int> cores = core_decompose(g2).core;
                if (reference.empty())
                    reference = cores;
                else
                    CHECK(cores == reference);
            }
            // and the CCN is exactly the diff of that vector
            std::vector<node_t> ccn_expect;
            for (node_t w = 0; w < static_cast<node_t>(g.node_count()); ++w)
                if (reference[w] != cs.core[w]) ccn_expect.push_back(w);
            CHECK(c.ccn == ccn_expect);
        }

        // removing any edge outside every KAES changes nothing
        for (const Edge& e : g.edges()) {
            if (all_kaes.count(e)) continue;
            Graph g2 = g;
            g2.remove_edge(e.u, e.v);
            CHECK(core_decompose(g2).core == cs.core);
        }
    }
}

TEST_CASE("cs_falsification_scan finds the csx witness") {
    Graph g = tg::csx();
    CoreState cs = core_decompose(g);
    auto witnesses = cs_falsification_scan(g, cs, 2);
    REQUIRE(witnesses.size() == 1);
    const CsWitness& w = witnesses.front();
    CHECK(w.node == tg::CSX_U);
    CHECK(w.cs_value == 3);
    CHECK(w.removed == std::vector<Edge>{Edge(tg::CSX_U, tg::CSX_A),
                                         Edge(tg::CSX_U, tg::CSX_C)});
    CHECK(w.new_core == 1);
}

TEST_CASE("cs_falsification_scan yields nothing when CS < 2 everywhere") {
    Graph g = tg::k4();
    CoreState cs = core_decompose(g);
    CHECK(cs_falsification_scan(g, cs, 1).empty());
}

TEST_CASE("%gain accounting: one removal per corona") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        Graph g = tg::er_graph(60, 0.1, 8800 + seed);
        CoreState cs = core_decompose(g);
        CoronaStats stats;
        CoronaSet set = find_k_coronas(g, cs, &stats);
        CHECK(stats.eval_calls == set.coronas.size());
        double gain = 1.0 - static_cast<double>(set.coronas.size()) /
                                static_cast<double>(g.edge_count());
        CHECK(gain > 0.0);  // far fewer coronas than edges
    }
    // csx: 1 - 2/6
    Graph g = tg::csx();
    CoreState cs = core_decompose(g);
    CoronaSet set = find_k_coronas(g, cs);
    CHECK(set.coronas.size() == 2);
    CHECK(g.edge_count() == 6);
}
