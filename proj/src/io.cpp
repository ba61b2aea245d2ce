#include "coreres/io.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace coreres {

std::string fmt_value(double x) {
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    // round-trippable and stable across runs of the same build
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

void write_core_csv(std::ostream& os, const Graph& g, const CoreState& cs) {
    os << "node,core,shell,subcore\n";
    for (node_t u = 0; u < static_cast<node_t>(g.node_count()); ++u)
        os << g.label(u) << ',' << cs.core[u] << ',' << cs.core[u] << ','
           << cs.subcore_id[u] << '\n';
}

void write_removal_strengths_csv(std::ostream& os, const Graph& g,
                                 const CoreState& cs,
                                 const std::vector<int>& cs_values,
                                 const RemovalStrengths& rs) {
    os << "node,core,cs,rs_id,rs_od\n";
    for (node_t u = 0; u < static_cast<node_t>(g.node_count()); ++u)
        os << g.label(u) << ',' << cs.core[u] << ',' << cs_values[u] << ','
           << fmt_value(rs.rs_id[u]) << ',' << rs.rs_od[u] << '\n';
}

void write_insertion_strengths_csv(std::ostream& os, const Graph& g,
                                   const InsertionStrengths& is) {
    os << "node,is_id,is_od,is_id_star,is_od_star,stddev_is_id\n";
    for (node_t u = 0; u < static_cast<node_t>(g.node_count()); ++u)
        os << g.label(u) << ',' << fmt_value(is.is_id[u]) << ','
           << fmt_value(is.is_od[u]) << ',' << fmt_value(is.is_id_star[u]) << ','
           << fmt_value(is.is_od_star[u]) << ','
           << fmt_value(is.stddev_is_id[u]) << '\n';
}

void write_digraph_edges(std::ostream& os, const Graph& g, const Digraph& dg) {
    for (auto [from, to] : dg.edges_sorted())
        os << g.label(from) << ' ' << g.label(to) << '\n';
}

void write_candidate_edges(std::ostream& os, const Graph& g,
                           const InsertionCandidateGraph& ic) {
    for (const CandidateEdge& ce : ic.edges)
        os << g.label(ce.u) << ' ' << g.label(ce.v) << ' '
           << (ce.origin == CandidateOrigin::distance2 ? "distance2" : "random")
           << '\n';
}

void write_f_csv(std::ostream& os, const std::vector<FSeries>& series) {
    os << "method,budget,F\n";
    for (const FSeries& s : series)
        for (std::size_t i = 0; i < s.budgets.size(); ++i)
            os << s.method << ',' << s.budgets[i] << ',' << fmt_value(s.F[i])
               << '\n';
}

void write_sir_csv(std::ostream& os, const std::vector<TraceSeries>& series) {
    os << "method,t,S_t_mean,S_t_std\n";
    for (const TraceSeries& s : series)
        for (std::size_t t = 0; t < s.trace.mean.size(); ++t)
            os << s.method << ',' << t << ',' << fmt_value(s.trace.mean[t]) << ','
               << fmt_value(s.trace.stddev[t]) << '\n';
}

void write_seeds_csv(std::ostream& os, const Graph& g,
                     const std::vector<std::pair<std::string, std::vector<node_t>>>& seeds) {
    os << "method,node\n";
    for (const auto& [method, nodes] : seeds)
        for (node_t u : nodes) os << method << ',' << g.label(u) << '\n';
}

}  // namespace coreres
