#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gatex/graph.hpp"
#include "gatex/modular.hpp"

namespace gatex {

enum class NodeLabel : std::uint8_t { Zero, One, LeafMark };

/// Rooted labeled DAG satisfying (N0)-(N4); leaves carry graph vertices.
struct GalledTree {
    struct Node {
        std::vector<int> parents;
        std::vector<int> children;
        int leaf_vertex = -1;
    };
    std::vector<Node> nodes;
    int root = 0;

    int order() const { return static_cast<int>(nodes.size()); }
    bool is_leaf(int v) const { return nodes[v].children.empty(); }
    bool is_hybrid(int v) const { return nodes[v].parents.size() == 2; }
    int leaf_count() const;
    std::vector<int> leaves() const;
    /// Node of the leaf carrying graph vertex x, or -1.
    int leaf_node(int x) const;
    /// Parents-before-children order.
    std::vector<int> topo_order() const;
};

using Labeling = std::vector<NodeLabel>;

struct LabeledNetwork {
    GalledTree net;
    Labeling labels;
};

struct ValidationReport {
    bool ok = true;
    std::string clause;  // first violated clause: "N0".."N4", "structure", ...
    std::vector<int> offenders;
    std::string message;
};

/// Check (N0)-(N4), the cycle shape of nontrivial biconnected components,
/// the 4|X|-3 size bound and the leaf-vertex map.  Violations are data.
ValidationReport validate(const GalledTree& n);
ValidationReport validate(const GalledTree& n, const Labeling& t);

/// A nontrivial biconnected component: two directed paths from rho to eta.
/// Sides are listed top (child of rho) to bottom (parent of eta) and
/// exclude rho and eta; side1 starts at the smaller-id child of rho.
struct Cycle {
    int rho = -1;
    int eta = -1;
    std::vector<int> side1, side2;
};

/// Extract all cycles; throws std::logic_error if the network is malformed.
std::vector<Cycle> cycles(const GalledTree& n);

/// Unique <=-minimal common ancestor of the given graph vertices (which must
/// be leaves).  Multiple minimal ancestors signal a corrupt network.
int lca(const GalledTree& n, const std::vector<int>& leaf_vertices);

/// Graph on the leaves; {x,y} is an edge iff the label of lca(x,y) is 1.
Graph explain(const GalledTree& n, const Labeling& t);

/// 0 <-> 1 on inner nodes; explain(n, flip(t)) is the complement.
Labeling flip_labels(const Labeling& t);

/// Primitive pseudo-cograph decomposition: pivot v plus the two orderings
/// whose parity pattern reproduces the edge set (slim: odd-index fan-out on
/// both sides; fat: even-index fan-out plus all cross edges).
struct PolarCatDecomposition {
    int pivot = -1;
    std::vector<int> y, z;  // y.back() == z.back() == pivot
    bool fat = false;
};

/// Regenerate the edge pattern of a decomposition; vertex ids in y and z
/// must be exactly 0..n-1.
Graph polar_cat_graph(const PolarCatDecomposition& d);

/// Strong quasi-discriminating elementary network explaining the
/// decomposition's graph: one rooted cycle, the two caterpillars as sides,
/// the hybrid's single child is the pivot leaf.  The label of the junction
/// above the pivot is semantically inert; it defaults to 0.
LabeledNetwork build_elementary(const PolarCatDecomposition& d,
                                NodeLabel junction_label = NodeLabel::Zero);

class NotGatexError : public std::runtime_error {
public:
    NotGatexError(const std::string& what, VertexSet failing_module)
        : std::runtime_error(what), failing_module_(failing_module) {}
    VertexSet failing_module() const { return failing_module_; }

private:
    VertexSet failing_module_;
};

/// Splice an elementary cycle into the MDT at each prime node.  decomps maps
/// MDT node id -> decomposition over child indices (present for prime nodes).
LabeledNetwork assemble_pvr(const ModularDecomposition& mdt,
                            const std::vector<std::optional<PolarCatDecomposition>>& decomps);

/// pvr-network of a GaTEx graph; throws NotGatexError with the failing prime
/// module otherwise.  The result is re-verified to explain g.
LabeledNetwork build_pvr(const Graph& g);

/// Seed-deterministic random valid labeled galled-tree whose explained graph
/// is GaTEx by construction.
LabeledNetwork random_galled_tree(int leaf_count, std::uint64_t seed);

}  // namespace gatex
