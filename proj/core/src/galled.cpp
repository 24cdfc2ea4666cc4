#include "gatex/galled.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "gatex/recognize.hpp"

namespace gatex {

int GalledTree::leaf_count() const {
    int count = 0;
    for (const Node& node : nodes) count += node.children.empty();
    return count;
}

std::vector<int> GalledTree::leaves() const {
    std::vector<int> out;
    for (int v = 0; v < order(); ++v)
        if (is_leaf(v)) out.push_back(v);
    return out;
}

int GalledTree::leaf_node(int x) const {
    for (int v = 0; v < order(); ++v)
        if (is_leaf(v) && nodes[v].leaf_vertex == x) return v;
    return -1;
}

std::vector<int> GalledTree::topo_order() const {
    std::vector<int> indeg(order());
    for (int v = 0; v < order(); ++v) indeg[v] = static_cast<int>(nodes[v].parents.size());
    std::vector<int> order_out, queue;
    for (int v = 0; v < order(); ++v)
        if (indeg[v] == 0) queue.push_back(v);
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        order_out.push_back(v);
        for (int c : nodes[v].children)
            if (--indeg[c] == 0) queue.push_back(c);
    }
    return order_out;  // shorter than order() iff the digraph has a cycle
}

namespace {

std::vector<std::pair<int, int>> directed_edges(const GalledTree& n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n.order(); ++v)
        for (int c : n.nodes[v].children) edges.emplace_back(v, c);
    return edges;
}

// Biconnected components of the underlying undirected graph, as edge-id lists.
std::vector<std::vector<int>> biconnected_components(int nverts,
                                                     const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<std::pair<int, int>>> inc(nverts);
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
        auto [u, v] = edges[e];
        inc[u].emplace_back(v, e);
        inc[v].emplace_back(u, e);
    }
    std::vector<int> disc(nverts, -1), low(nverts, 0);
    std::vector<int> edge_stack;
    std::vector<std::vector<int>> comps;
    int timer = 0;

    struct Frame {
        int v;
        int parent_edge;
        std::size_t idx;
    };
    for (int s = 0; s < nverts; ++s) {
        if (disc[s] != -1) continue;
        std::vector<Frame> stack{{s, -1, 0}};
        disc[s] = low[s] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.idx < inc[f.v].size()) {
                auto [w, e] = inc[f.v][f.idx++];
                if (e == f.parent_edge) continue;
                if (disc[w] == -1) {
                    edge_stack.push_back(e);
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, e, 0});
                } else if (disc[w] < disc[f.v]) {
                    edge_stack.push_back(e);
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                int v = f.v;
                int pe = f.parent_edge;
                stack.pop_back();
                if (stack.empty()) continue;
                int u = stack.back().v;
                low[u] = std::min(low[u], low[v]);
                if (low[v] >= disc[u]) {
                    std::vector<int> comp;
                    while (!edge_stack.empty()) {
                        int e = edge_stack.back();
                        edge_stack.pop_back();
                        comp.push_back(e);
                        if (e == pe) break;
                    }
                    comps.push_back(std::move(comp));
                }
            }
        }
    }
    return comps;
}

struct CycleAnalysis {
    bool ok = true;
    std::string message;
    std::vector<int> offenders;
    std::vector<Cycle> found;
};

CycleAnalysis analyze_cycles(const GalledTree& n) {
    CycleAnalysis res;
    auto fail = [&](std::string msg, std::vector<int> nodes = {}) {
        res.ok = false;
        res.message = std::move(msg);
        res.offenders = std::move(nodes);
        return res;
    };
    auto edges = directed_edges(n);
    for (const auto& comp_edges : biconnected_components(n.order(), edges)) {
        if (comp_edges.size() < 2) continue;
        std::vector<int> verts;
        for (int e : comp_edges) {
            verts.push_back(edges[e].first);
            verts.push_back(edges[e].second);
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        if (comp_edges.size() != verts.size())
            return fail("nontrivial biconnected component is not a single cycle", verts);

        std::vector<int> indeg(n.order(), 0), child_in_comp(n.order(), -1);
        int rho = -1, eta = -1;
        for (int e : comp_edges) {
            auto [p, c] = edges[e];
            ++indeg[c];
            child_in_comp[p] = child_in_comp[p] == -1 ? c : -2;  // -2: two children in comp
        }
        int rho_count = 0;
        for (int v : verts) {
            if (indeg[v] == 0) {
                rho = v;
                ++rho_count;
            } else if (indeg[v] == 2) {
                if (eta != -1) return fail("biconnected component with two internal hybrids", verts);
                eta = v;
            } else if (indeg[v] != 1) {
                return fail("vertex with more than two parents in a component", {v});
            }
        }
        if (rho_count != 1 || eta == -1)
            return fail("component cycle lacks a unique top/hybrid pair", verts);

        Cycle cyc;
        cyc.rho = rho;
        cyc.eta = eta;
        std::vector<int> tops;
        for (int e : comp_edges)
            if (edges[e].first == rho) tops.push_back(edges[e].second);
        std::sort(tops.begin(), tops.end());
        if (tops.size() != 2) return fail("cycle root must have two children on the cycle", {rho});
        std::size_t seen = 2;  // rho and eta
        for (int s = 0; s < 2; ++s) {
            std::vector<int>& side = s == 0 ? cyc.side1 : cyc.side2;
            int cur = tops[s];
            std::size_t guard = 0;
            while (cur != eta) {
                if (++guard > verts.size()) return fail("cycle side does not reach the hybrid", verts);
                side.push_back(cur);
                ++seen;
                cur = child_in_comp[cur];
                if (cur < 0) return fail("cycle side breaks off", verts);
            }
        }
        if (seen != verts.size()) return fail("cycle sides do not cover the component", verts);
        res.found.push_back(std::move(cyc));
    }
    return res;
}

}  // namespace

std::vector<Cycle> cycles(const GalledTree& n) {
    CycleAnalysis res = analyze_cycles(n);
    if (!res.ok) throw std::logic_error("cycles: " + res.message);
    return res.found;
}

ValidationReport validate(const GalledTree& n) {
    auto violation = [](std::string clause, std::string msg, std::vector<int> nodes = {}) {
        ValidationReport r;
        r.ok = false;
        r.clause = std::move(clause);
        r.message = std::move(msg);
        r.offenders = std::move(nodes);
        return r;
    };

    if (n.order() == 0) return violation("N0", "network has no nodes");
    for (int v = 0; v < n.order(); ++v) {
        const auto& node = n.nodes[v];
        for (int c : node.children) {
            if (c < 0 || c >= n.order()) return violation("structure", "child id out of range", {v});
            const auto& ps = n.nodes[c].parents;
            if (std::count(ps.begin(), ps.end(), v) != 1)
                return violation("structure", "parent/child lists disagree", {v, c});
        }
        std::vector<int> ps = node.parents;
        std::sort(ps.begin(), ps.end());
        if (std::adjacent_find(ps.begin(), ps.end()) != ps.end())
            return violation("structure", "duplicate parent", {v});
        for (int p : ps) {
            if (p < 0 || p >= n.order()) return violation("structure", "parent id out of range", {v});
            const auto& cs = n.nodes[p].children;
            if (std::count(cs.begin(), cs.end(), v) < 1)
                return violation("structure", "parent/child lists disagree", {p, v});
        }
    }
    if (n.topo_order().size() != static_cast<std::size_t>(n.order()))
        return violation("structure", "directed cycle");

    if (n.order() == 1) {
        // (N0): a single node is the one-leaf network.
        if (n.nodes[0].leaf_vertex != 0) return violation("N0", "single node must carry vertex 0", {0});
        return {};
    }

    std::vector<int> roots;
    for (int v = 0; v < n.order(); ++v)
        if (n.nodes[v].parents.empty()) roots.push_back(v);
    if (roots.size() != 1 || roots[0] != n.root)
        return violation("N1", "network must have the unique root it names", roots);
    if (n.nodes[n.root].children.size() < 2)
        return violation("N1", "root outdegree must be at least 2", {n.root});

    for (int v = 0; v < n.order(); ++v) {
        const auto& node = n.nodes[v];
        bool leaf_marked = node.leaf_vertex >= 0;
        if (node.children.empty() != leaf_marked)
            return violation("N2", "leaves are exactly the outdegree-0 nodes", {v});
        if (leaf_marked && node.parents.size() != 1)
            return violation("N2", "leaf indegree must be 1", {v});
        if (v == n.root || leaf_marked) continue;
        bool tree_vertex = node.parents.size() == 1 && node.children.size() >= 2;
        bool hybrid_vertex = node.parents.size() == 2 && node.children.size() >= 1;
        if (!tree_vertex && !hybrid_vertex)
            return violation("N3", "inner vertex is neither tree-vertex nor hybrid-vertex", {v});
    }

    std::vector<int> leaf_vertices;
    for (int v : n.leaves()) leaf_vertices.push_back(n.nodes[v].leaf_vertex);
    std::sort(leaf_vertices.begin(), leaf_vertices.end());
    for (std::size_t i = 0; i < leaf_vertices.size(); ++i)
        if (leaf_vertices[i] != static_cast<int>(i))
            return violation("leaf-map", "leaf vertices must be exactly 0..|X|-1");

    CycleAnalysis cyc = analyze_cycles(n);
    if (!cyc.ok) return violation("N4", cyc.message, cyc.offenders);

    if (n.order() > 4 * n.leaf_count() - 3)
        return violation("size", "|V| exceeds 4|X| - 3");
    return {};
}

ValidationReport validate(const GalledTree& n, const Labeling& t) {
    ValidationReport base = validate(n);
    if (!base.ok) return base;
    if (t.size() != static_cast<std::size_t>(n.order())) {
        base.ok = false;
        base.clause = "labeling";
        base.message = "labeling size mismatch";
        return base;
    }
    for (int v = 0; v < n.order(); ++v) {
        if ((t[v] == NodeLabel::LeafMark) != n.is_leaf(v)) {
            base.ok = false;
            base.clause = "labeling";
            base.message = "leaf mark must appear exactly on leaves";
            base.offenders = {v};
            return base;
        }
    }
    return base;
}

namespace {

// Descendant bitsets (over node ids) in words of 64.
std::vector<std::vector<std::uint64_t>> descendant_sets(const GalledTree& n) {
    int words = (n.order() + 63) / 64;
    std::vector<std::vector<std::uint64_t>> desc(n.order(), std::vector<std::uint64_t>(words, 0));
    std::vector<int> topo = n.topo_order();
    if (topo.size() != static_cast<std::size_t>(n.order()))
        throw std::invalid_argument("network is not a DAG");
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        int v = *it;
        desc[v][v / 64] |= std::uint64_t{1} << (v % 64);
        for (int c : n.nodes[v].children)
            for (int w = 0; w < words; ++w) desc[v][w] |= desc[c][w];
    }
    return desc;
}

bool bit_test(const std::vector<std::uint64_t>& set, int v) {
    return (set[v / 64] >> (v % 64)) & 1;
}

}  // namespace

int lca(const GalledTree& n, const std::vector<int>& leaf_vertices) {
    if (leaf_vertices.empty()) throw std::invalid_argument("lca: empty leaf set");
    std::vector<int> nodes;
    for (int x : leaf_vertices) {
        int v = n.leaf_node(x);
        if (v < 0) throw std::invalid_argument("lca: not a leaf vertex: " + std::to_string(x));
        nodes.push_back(v);
    }
    auto desc = descendant_sets(n);
    std::vector<int> common;
    for (int u = 0; u < n.order(); ++u) {
        bool all = true;
        for (int v : nodes)
            if (!bit_test(desc[u], v)) {
                all = false;
                break;
            }
        if (all) common.push_back(u);
    }
    // <=-minimal: no other common ancestor strictly below.
    std::vector<int> minimal;
    for (int u : common) {
        bool min = true;
        for (int w : common)
            if (w != u && bit_test(desc[u], w)) {
                min = false;
                break;
            }
        if (min) minimal.push_back(u);
    }
    if (minimal.size() != 1)
        throw std::logic_error("lca is not unique; network violates the galled-tree guarantees");
    return minimal[0];
}

Graph explain(const GalledTree& n, const Labeling& t) {
    if (t.size() != static_cast<std::size_t>(n.order()))
        throw std::invalid_argument("explain: labeling size mismatch");
    int nleaves = n.leaf_count();
    if (nleaves > Graph::max_vertices) throw std::invalid_argument("explain: too many leaves");
    std::vector<int> leaf_of(nleaves, -1);
    for (int v : n.leaves()) {
        int x = n.nodes[v].leaf_vertex;
        if (x < 0 || x >= nleaves || leaf_of[x] != -1)
            throw std::invalid_argument("explain: leaf vertices must be exactly 0..|X|-1");
        if (t[v] != NodeLabel::LeafMark) throw std::invalid_argument("explain: leaf lacks leaf mark");
        leaf_of[x] = v;
    }
    for (int v = 0; v < n.order(); ++v)
        if (!n.is_leaf(v) && t[v] == NodeLabel::LeafMark)
            throw std::invalid_argument("explain: inner node carries leaf mark");

    auto desc = descendant_sets(n);
    Graph g(nleaves);
    std::vector<int> common;
    for (int x = 0; x < nleaves; ++x) {
        for (int y = x + 1; y < nleaves; ++y) {
            common.clear();
            for (int u = 0; u < n.order(); ++u)
                if (bit_test(desc[u], leaf_of[x]) && bit_test(desc[u], leaf_of[y])) common.push_back(u);
            int the = -1;
            for (int u : common) {
                bool min = true;
                for (int w : common)
                    if (w != u && bit_test(desc[u], w)) {
                        min = false;
                        break;
                    }
                if (min) {
                    if (the != -1) throw std::logic_error("explain: non-unique lca");
                    the = u;
                }
            }
            if (the == -1) throw std::logic_error("explain: leaves without common ancestor");
            if (t[the] == NodeLabel::One) g.add_edge(x, y);
        }
    }
    return g;
}

Labeling flip_labels(const Labeling& t) {
    Labeling out = t;
    for (NodeLabel& l : out) {
        if (l == NodeLabel::Zero)
            l = NodeLabel::One;
        else if (l == NodeLabel::One)
            l = NodeLabel::Zero;
    }
    return out;
}

namespace {

void check_decomposition(const PolarCatDecomposition& d) {
    if (d.y.size() < 2 || d.z.size() < 2)
        throw std::invalid_argument("polar-cat orderings need at least two entries each");
    if (d.y.back() != d.pivot || d.z.back() != d.pivot)
        throw std::invalid_argument("polar-cat orderings must end in the pivot");
    std::vector<int> all(d.y.begin(), d.y.end());
    all.insert(all.end(), d.z.begin(), d.z.end() - 1);
    int n = static_cast<int>(all.size());
    if (n < 4) throw std::invalid_argument("polar-cat needs at least four vertices");
    std::vector<char> seen(n, 0);
    for (int v : all) {
        if (v < 0 || v >= n || seen[v])
            throw std::invalid_argument("polar-cat orderings must cover 0..n-1 exactly once");
        seen[v] = 1;
    }
}

}  // namespace

Graph polar_cat_graph(const PolarCatDecomposition& d) {
    check_decomposition(d);
    int n = static_cast<int>(d.y.size() + d.z.size() - 1);
    Graph g(n);
    auto fan = [&](const std::vector<int>& side) {
        for (std::size_t i = 1; i <= side.size(); ++i) {
            bool emits = d.fat ? i % 2 == 0 : i % 2 == 1;
            if (!emits) continue;
            for (std::size_t j = i + 1; j <= side.size(); ++j) g.add_edge(side[i - 1], side[j - 1]);
        }
    };
    fan(d.y);
    fan(d.z);
    if (d.fat)
        for (std::size_t i = 0; i + 1 < d.y.size(); ++i)
            for (std::size_t j = 0; j + 1 < d.z.size(); ++j) g.add_edge(d.y[i], d.z[j]);
    return g;
}

namespace {

int add_network_node(GalledTree& net, Labeling& lab, NodeLabel l) {
    net.nodes.emplace_back();
    lab.push_back(l);
    return net.order() - 1;
}

void add_network_edge(GalledTree& net, int p, int c) {
    net.nodes[p].children.push_back(c);
    net.nodes[c].parents.push_back(p);
}

// Cycle for one polar-cat: the two caterpillar spines hang the given
// subtree roots off the sides; the hybrid's single child is the pivot's
// subtree.  Returns the cycle root.
int attach_cycle(GalledTree& net, Labeling& lab, const PolarCatDecomposition& d,
                 const std::vector<int>& child_roots, NodeLabel junction_label) {
    check_decomposition(d);
    int rho = add_network_node(net, lab, d.fat ? NodeLabel::One : NodeLabel::Zero);
    int hybrid = add_network_node(net, lab, junction_label);
    for (const std::vector<int>& side : {d.y, d.z}) {
        int above = rho;
        for (std::size_t i = 1; i + 1 <= side.size(); ++i) {
            bool odd = i % 2 == 1;
            NodeLabel l = (odd != d.fat) ? NodeLabel::One : NodeLabel::Zero;
            int s = add_network_node(net, lab, l);
            add_network_edge(net, above, s);
            add_network_edge(net, s, child_roots[side[i - 1]]);
            above = s;
        }
        add_network_edge(net, above, hybrid);
    }
    add_network_edge(net, hybrid, child_roots[d.pivot]);
    return rho;
}

}  // namespace

LabeledNetwork build_elementary(const PolarCatDecomposition& d, NodeLabel junction_label) {
    check_decomposition(d);
    LabeledNetwork out;
    int n = static_cast<int>(d.y.size() + d.z.size() - 1);
    std::vector<int> leaf_roots(n);
    for (int x = 0; x < n; ++x) {
        int v = add_network_node(out.net, out.labels, NodeLabel::LeafMark);
        out.net.nodes[v].leaf_vertex = x;
        leaf_roots[x] = v;
    }
    out.net.root = attach_cycle(out.net, out.labels, d, leaf_roots, junction_label);
    return out;
}

LabeledNetwork assemble_pvr(const ModularDecomposition& mdt,
                            const std::vector<std::optional<PolarCatDecomposition>>& decomps) {
    LabeledNetwork out;
    std::vector<int> piece(mdt.nodes.size(), -1);
    for (int id : mdt.postorder()) {
        const auto& node = mdt.nodes[id];
        switch (node.label) {
            case ModuleLabel::Leaf: {
                int v = add_network_node(out.net, out.labels, NodeLabel::LeafMark);
                out.net.nodes[v].leaf_vertex = lowest(node.module);
                piece[id] = v;
                break;
            }
            case ModuleLabel::Parallel:
            case ModuleLabel::Series: {
                NodeLabel l = node.label == ModuleLabel::Series ? NodeLabel::One : NodeLabel::Zero;
                int v = add_network_node(out.net, out.labels, l);
                for (int c : node.children) add_network_edge(out.net, v, piece[c]);
                piece[id] = v;
                break;
            }
            case ModuleLabel::Prime: {
                if (id >= static_cast<int>(decomps.size()) || !decomps[id])
                    throw std::invalid_argument("assemble_pvr: missing decomposition for prime node");
                std::vector<int> child_roots;
                for (int c : node.children) child_roots.push_back(piece[c]);
                piece[id] = attach_cycle(out.net, out.labels, *decomps[id], child_roots,
                                         NodeLabel::Zero);
                break;
            }
        }
    }
    out.net.root = piece[mdt.root];
    return out;
}

LabeledNetwork build_pvr(const Graph& g) {
    GatexAnalysis analysis = analyze_gatex(g);  // throws NotGatexError on reject
    LabeledNetwork out = assemble_pvr(analysis.mdt, analysis.prime_decomps);
    if (!(explain(out.net, out.labels) == g))
        throw std::logic_error("pvr network does not explain its input graph");
    return out;
}

LabeledNetwork random_galled_tree(int leaf_count, std::uint64_t seed) {
    if (leaf_count < 1) throw std::invalid_argument("random_galled_tree: need at least one leaf");
    std::mt19937_64 rng(seed);
    LabeledNetwork out;

    auto rand_int = [&](int lo, int hi) {  // inclusive
        return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };

    enum Kind { Parallel = 0, Series = 1, Free = 2 };
    // Children of 0-nodes must not be 0-nodes (dito for 1), so the skeleton
    // is the true MDT of the explained graph.
    std::function<int(std::vector<int>, int)> build = [&](std::vector<int> verts,
                                                          int parent_kind) -> int {
        if (verts.size() == 1) {
            int v = add_network_node(out.net, out.labels, NodeLabel::LeafMark);
            out.net.nodes[v].leaf_vertex = verts[0];
            return v;
        }
        int size = static_cast<int>(verts.size());
        bool prime = size >= 4 && rand_int(0, 99) < 35;
        int k;
        if (prime) {
            k = rand_int(4, std::min(size, 10));
        } else {
            k = rand_int(2, std::min(size, 4));
        }
        // Random partition into k nonempty parts.
        std::shuffle(verts.begin(), verts.end(), rng);
        std::vector<std::vector<int>> parts(k);
        for (int i = 0; i < k; ++i) parts[i].push_back(verts[i]);
        for (int i = k; i < size; ++i) parts[rand_int(0, k - 1)].push_back(verts[i]);

        if (!prime) {
            int kind = parent_kind == Free ? rand_int(0, 1) : 1 - parent_kind;
            std::vector<int> child_roots;
            for (auto& part : parts) child_roots.push_back(build(std::move(part), kind));
            int v = add_network_node(out.net, out.labels,
                                     kind == Series ? NodeLabel::One : NodeLabel::Zero);
            for (int c : child_roots) add_network_edge(out.net, v, c);
            return v;
        }

        std::vector<int> child_roots;
        for (auto& part : parts) child_roots.push_back(build(std::move(part), Free));
        PolarCatDecomposition d;
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
        std::shuffle(idx.begin(), idx.end(), rng);
        int ell = rand_int(2, k - 1);
        d.pivot = idx[k - 1];
        d.y.assign(idx.begin(), idx.begin() + (ell - 1));
        d.y.push_back(d.pivot);
        d.z.assign(idx.begin() + (ell - 1), idx.end() - 1);
        d.z.push_back(d.pivot);
        d.fat = rand_int(0, 1) == 1;
        return attach_cycle(out.net, out.labels, d, child_roots, NodeLabel::Zero);
    };

    std::vector<int> verts(leaf_count);
    for (int i = 0; i < leaf_count; ++i) verts[i] = i;
    out.net.root = build(std::move(verts), Free);
    return out;
}

}  // namespace gatex
