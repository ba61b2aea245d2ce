#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "coreres/applications.hpp"
#include "coreres/core.hpp"
#include "coreres/digraph.hpp"
#include "coreres/graph.hpp"
#include "coreres/insertion.hpp"
#include "coreres/removal.hpp"
#include "coreres/sir.hpp"

namespace coreres {

/// Canonical number formatting for CSV output: "inf" for the infinity
/// sentinel, shortest round-trippable decimal otherwise.
std::string fmt_value(double x);

// Writers use the graph's original labels in the node columns.
void write_core_csv(std::ostream& os, const Graph& g, const CoreState& cs);
void write_removal_strengths_csv(std::ostream& os, const Graph& g,
                                 const CoreState& cs,
                                 const std::vector<int>& cs_values,
                                 const RemovalStrengths& rs);
void write_insertion_strengths_csv(std::ostream& os, const Graph& g,
                                   const InsertionStrengths& is);
void write_digraph_edges(std::ostream& os, const Graph& g, const Digraph& dg);
void write_candidate_edges(std::ostream& os, const Graph& g,
                           const InsertionCandidateGraph& ic);

struct FSeries {
    std::string method;
    std::vector<std::size_t> budgets;
    std::vector<double> F;
};

void write_f_csv(std::ostream& os, const std::vector<FSeries>& series);

struct TraceSeries {
    std::string method;
    SirTrace trace;
};

void write_sir_csv(std::ostream& os, const std::vector<TraceSeries>& series);
void write_seeds_csv(std::ostream& os, const Graph& g,
                     const std::vector<std::pair<std::string, std::vector<node_t>>>& seeds);

}  // namespace coreres
