#pragma once

#include <utility>
#include <vector>

#include "gatex/graph.hpp"

namespace gatex {

/// Graph with its edges split into black (certain) and red (error) edges.
struct Trigraph {
    int n = 0;
    std::vector<VertexSet> black, red;
    VertexSet alive = 0;

    static Trigraph from_graph(const Graph& g);

    int red_degree(int v) const { return popcount(red[v]); }
    int max_red_degree() const;
    bool has_vertex(int v) const { return (alive >> v) & 1; }
};

/// Merge u and v into min(u, v): black survives where both agree, absent
/// where both are absent, red otherwise; red edges stay red.
Trigraph contract(const Trigraph& t, int u, int v);

struct ContractionSequence {
    std::vector<std::pair<int, int>> merges;  // merged vertex keeps the smaller index
    int width = 0;
};

/// Width-<=1 contraction sequence for a GaTEx graph: MDT postorder, twins
/// contracted pairwise inside series/parallel nodes, the two-phase polar-cat
/// schedule inside prime quotients (fat handled by complement symmetry).
/// Width 0 exactly for cographs.  Throws NotGatexError.
ContractionSequence build_one_contraction_sequence(const Graph& g);

}  // namespace gatex
