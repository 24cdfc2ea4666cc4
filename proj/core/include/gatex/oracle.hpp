#pragma once

#include "gatex/graph.hpp"

namespace gatex {

struct GraphInvariants {
    int omega;
    int alpha;
    int chi;
};

/// Exact clique, independence and chromatic numbers by exhaustive search.
/// Ground truth for the structured solvers; refuses n > 20.
GraphInvariants brute_force_invariants(const Graph& g);

VertexSet max_clique_brute(const Graph& g);
int chromatic_number_brute(const Graph& g);

}  // namespace gatex
