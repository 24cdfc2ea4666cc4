#pragma once

#include <vector>

#include "gatex/graph.hpp"

namespace gatex {

enum class ModuleLabel { Parallel, Series, Prime, Leaf };

/// Rooted tree over the strong modules: root = V(G), leaves = singletons,
/// children of a node are the maximal strong modules of its induced
/// subgraph.  Children are ordered by smallest contained vertex.
struct ModularDecomposition {
    struct Node {
        VertexSet module = 0;
        ModuleLabel label = ModuleLabel::Leaf;
        int parent = -1;
        std::vector<int> children;
    };
    std::vector<Node> nodes;
    int root = 0;

    bool is_cotree() const;                 // no prime node
    std::vector<int> postorder() const;
    int prime_count() const;
};

/// True iff every vertex outside s is adjacent to all or none of s.
bool is_module(const Graph& g, VertexSet s);

/// Smallest module of g[within] containing seed, grown by splitter closure.
VertexSet minimal_module(const Graph& g, VertexSet within, VertexSet seed);

/// All strong modules (modules overlapping no other module); a hierarchy
/// containing the singletons and V.
std::vector<VertexSet> strong_modules(const Graph& g);

ModularDecomposition build_mdt(const Graph& g);

/// No nontrivial module and at least four vertices.
bool is_primitive(const Graph& g);

/// Quotient of g by a partition into modules; one vertex per part, parts
/// adjacent iff their members are fully adjacent.  Parts are taken in the
/// given order.
Graph quotient(const Graph& g, const std::vector<VertexSet>& parts);

}  // namespace gatex
