#pragma once

#include <optional>

#include "gatex/forbidden.hpp"
#include "gatex/galled.hpp"
#include "gatex/graph.hpp"
#include "gatex/modular.hpp"

namespace gatex {

/// P4-free check over an induced vertex subset.
bool cograph_within(const Graph& g, VertexSet within);
bool is_cograph(const Graph& g);

/// MDT when it has no prime node (the cotree explaining g), else nullopt.
std::optional<ModularDecomposition> cotree(const Graph& g);

struct PseudoCographWitness {
    int pivot = -1;
    VertexSet side1 = 0;  // V(G1); intersects side2 exactly in the pivot
    VertexSet side2 = 0;
    bool fat = false;  // G - v is the join of the sides minus v; slim: disjoint union
    bool degenerate = false;  // |V| <= 2, accepted by definition
};

std::optional<PseudoCographWitness> recognize_pseudo_cograph(const Graph& g);

/// Decomposition with ordered Y, Z reproducing the edge pattern exactly;
/// nullopt unless g is a primitive pseudo-cograph.
std::optional<PolarCatDecomposition> recognize_polar_cat(const Graph& g);

/// MDT plus a polar-cat decomposition (over child indices) for every prime
/// node.  This is the front-end shared by the pvr builder and the solvers.
struct GatexAnalysis {
    ModularDecomposition mdt;
    std::vector<std::optional<PolarCatDecomposition>> prime_decomps;
};

struct AnalysisResult {
    std::optional<GatexAnalysis> analysis;
    VertexSet failing_module = 0;  // set when analysis is empty
};

AnalysisResult try_analyze_gatex(const Graph& g);
GatexAnalysis analyze_gatex(const Graph& g);  // throws NotGatexError on reject

struct ForbiddenEmbedding {
    int catalog_id = -1;
    std::vector<int> map;  // pattern vertex -> graph vertex
};

struct GatexVerdict {
    bool accepted = false;
    std::optional<LabeledNetwork> network;        // accept: explaining pvr-network
    std::optional<VertexSet> failing_module;      // structural reject
    std::optional<ForbiddenEmbedding> embedding;  // forbidden-subgraph reject
};

/// Accept iff every prime quotient is a (primitive) pseudo-cograph; the
/// accept witness is the pvr-network, re-verified by an explain roundtrip.
GatexVerdict recognize_gatex_structural(const Graph& g);

/// Accept iff no catalog member embeds as an induced subgraph; the reject
/// witness is a concrete embedding, re-verified both ways.
GatexVerdict recognize_gatex_forbidden(const Graph& g, const ForbiddenCatalog& catalog);
GatexVerdict recognize_gatex_forbidden(const Graph& g);

}  // namespace gatex
