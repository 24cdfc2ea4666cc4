#pragma once

#include <utility>
#include <vector>

#include "gatex/galled.hpp"
#include "gatex/graph.hpp"

namespace gatex {

struct CliqueResult {
    int size = 0;
    std::vector<int> witness;  // vertices of a maximum clique, sorted
};

struct IndependentSetResult {
    int size = 0;
    std::vector<int> witness;
};

struct ColoringResult {
    int colors = 0;
    std::vector<int> color;  // per vertex
    std::vector<int> order;  // perfect order used by the greedy pass
};

/// One direction per edge; transitive: (x,y),(y,z) present implies (x,z).
struct Orientation {
    std::vector<std::pair<int, int>> arcs;
};

/// Exact clique number of a GaTEx graph by the postorder network DP
/// (parallel: max, series: sum, prime: cycle walk with the hybrid
/// bookkeeping).  Witness re-verified against g.  Throws NotGatexError.
CliqueResult clique_number(const Graph& g);

/// Clique DP on the flipped labeling of the same network.
IndependentSetResult independence_number(const Graph& g);

/// chi = omega on these graphs; the returned coloring is produced
/// constructively by the perfect-order greedy pass.
ColoringResult chromatic_number(const Graph& g);

/// Transitive orientation: ordered fans inside primitive quotients, a fixed
/// linear order inside series quotients, composed through the MDT.
Orientation transitive_orientation(const Graph& g);

/// Topological order of the transitive orientation plus a greedy coloring
/// along it; uses exactly clique_number(g).size colors.
ColoringResult perfect_order_coloring(const Graph& g);

struct SolveSummary {
    CliqueResult clique;
    IndependentSetResult independent_set;
    ColoringResult coloring;
    Orientation orientation;
};

SolveSummary solve_all(const Graph& g);

/// DP entry point on an explaining network directly (no recognition); leaf
/// values replace the per-leaf initialization of 1.  The network must be in
/// pvr form (every cycle strong, hybrids with a single child).
long long clique_size_on_network(const LabeledNetwork& nt,
                                 const std::vector<long long>& leaf_values);

/// Unit-value DP plus witness extraction; returns leaf graph vertices.
std::vector<int> clique_leaves_on_network(const LabeledNetwork& nt);

/// Per-cycle DP facts exposed for validation: the leaf sets of the two
/// sides and of the hybrid subtree, and the side flags recording whether
/// some maximum clique of the side subgraph still meets the hybrid leaves.
struct CycleCliqueFacts {
    VertexSet side1_leaves = 0;
    VertexSet side2_leaves = 0;
    VertexSet eta_leaves = 0;
    bool side1_meets_eta = false;
    bool side2_meets_eta = false;
    long long omega_cycle = 0;  // clique number of the prime module's subgraph
};

std::vector<CycleCliqueFacts> clique_cycle_facts(const LabeledNetwork& nt);

}  // namespace gatex
