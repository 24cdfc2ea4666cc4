#include "gatex/recognize.hpp"

#include <algorithm>

#include "gatex/embed.hpp"

namespace gatex {

bool cograph_within(const Graph& g, VertexSet within) {
    // A P4 b-c plus pendant ends: a ~ b only, d ~ c only, a !~ d.
    for (int b : set_to_vector(within)) {
        for (int c : set_to_vector(g.neighbors(b) & within)) {
            VertexSet a_side = g.neighbors(b) & ~g.neighbors(c) & within & ~bit(c);
            if (!a_side) continue;
            VertexSet d_side = g.neighbors(c) & ~g.neighbors(b) & within & ~bit(b);
            for (int a : set_to_vector(a_side))
                if (d_side & ~g.neighbors(a) & ~bit(a)) return false;
        }
    }
    return true;
}

bool is_cograph(const Graph& g) { return cograph_within(g, g.vertices()); }

std::optional<ModularDecomposition> cotree(const Graph& g) {
    ModularDecomposition mdt = build_mdt(g);
    if (!mdt.is_cotree()) return std::nullopt;
    return mdt;
}

namespace {

// Bipartition the pieces (components of h - v for slim, co-components for
// fat-on-the-complement) into two groups whose union with v induces
// cographs.  Cross-piece P4s all run through v, which reduces the search to
// per-piece facts: t = piece + v induces a cograph, touched = v has a
// neighbor in the piece, mixed = the piece has an edge half-seen by v.
struct PieceData {
    std::vector<VertexSet> pieces;
    std::vector<char> touched, mixed;
    bool all_cograph = true;
};

PieceData piece_data(const Graph& h, int v, const std::vector<VertexSet>& pieces) {
    PieceData d;
    d.pieces = pieces;
    VertexSet nv = h.neighbors(v);
    for (VertexSet piece : pieces) {
        d.touched.push_back((nv & piece) != 0);
        bool mixed = false;
        for (int x : set_to_vector(nv & piece))
            if (h.neighbors(x) & piece & ~nv) {
                mixed = true;
                break;
            }
        d.mixed.push_back(mixed);
        if (d.all_cograph && !cograph_within(h, piece | bit(v))) d.all_cograph = false;
    }
    return d;
}

// A group is cograph-inducing iff it has no (mixed piece, other touched
// piece) pair, so a valid bipartition exists iff the mixed pieces number at
// most two and, when there are exactly two, nothing else is touched; one
// mixed piece is simply isolated on its own side.
std::optional<std::pair<VertexSet, VertexSet>> split_pieces(const PieceData& d) {
    if (!d.all_cograph || d.pieces.size() < 2) return std::nullopt;
    std::vector<int> mixed_idx;
    int touched_count = 0;
    for (std::size_t i = 0; i < d.pieces.size(); ++i) {
        if (d.mixed[i]) mixed_idx.push_back(static_cast<int>(i));
        touched_count += d.touched[i];
    }
    int isolate = -1;
    if (mixed_idx.size() > 2) return std::nullopt;
    if (mixed_idx.size() == 2) {
        if (touched_count != 2) return std::nullopt;
        isolate = mixed_idx[0];
    } else if (mixed_idx.size() == 1) {
        isolate = mixed_idx[0];
    } else {
        isolate = 0;
    }
    VertexSet a = d.pieces[isolate], b = 0;
    for (std::size_t i = 0; i < d.pieces.size(); ++i)
        if (static_cast<int>(i) != isolate) b |= d.pieces[i];
    return std::make_pair(a, b);
}

}  // namespace

std::optional<PseudoCographWitness> recognize_pseudo_cograph(const Graph& g) {
    int n = g.order();
    if (n <= 2) {
        PseudoCographWitness w;
        w.degenerate = true;
        w.side1 = w.side2 = g.vertices();
        return w;
    }
    Graph gc = complement(g);
    for (int v = 0; v < n; ++v) {
        VertexSet without = g.vertices() & ~bit(v);
        if (!cograph_within(g, without)) continue;
        // Slim split on g, fat split on the complement; cographs and the
        // membership checks transfer verbatim under complementation.
        for (bool fat : {false, true}) {
            const Graph& h = fat ? gc : g;
            auto split = split_pieces(piece_data(h, v, components(h, without)));
            if (!split) continue;
            PseudoCographWitness w;
            w.pivot = v;
            w.side1 = split->first | bit(v);
            w.side2 = split->second | bit(v);
            w.fat = fat;
            return w;
        }
    }
    return std::nullopt;
}

namespace {

// Order of a caterpillar cotree over g[mask]: the spine's pendant leaves top
// to bottom, the pivot forced into the final cherry slot.  nullopt when the
// cotree is not a binary caterpillar or the pivot is not in a cherry.
std::optional<std::vector<int>> caterpillar_order(const Graph& g, VertexSet mask, int pivot) {
    InducedSubgraph sub = induced_subgraph(g, mask);
    if (sub.graph.order() < 2) return std::nullopt;
    ModularDecomposition mdt = build_mdt(sub.graph);
    std::vector<int> order;
    int cur = mdt.root;
    for (;;) {
        const auto& node = mdt.nodes[cur];
        if (node.label == ModuleLabel::Prime || node.children.size() != 2) return std::nullopt;
        int a = node.children[0], b = node.children[1];
        bool a_leaf = mdt.nodes[a].label == ModuleLabel::Leaf;
        bool b_leaf = mdt.nodes[b].label == ModuleLabel::Leaf;
        if (a_leaf && b_leaf) {
            int x = sub.vertex_of[lowest(mdt.nodes[a].module)];
            int y = sub.vertex_of[lowest(mdt.nodes[b].module)];
            if (x != pivot && y != pivot) return std::nullopt;
            order.push_back(x == pivot ? y : x);
            order.push_back(pivot);
            return order;
        }
        if (a_leaf == b_leaf) return std::nullopt;  // two inner children
        int leaf = a_leaf ? a : b;
        int vert = sub.vertex_of[lowest(mdt.nodes[leaf].module)];
        if (vert == pivot) return std::nullopt;  // pivot must sit in the cherry
        order.push_back(vert);
        cur = a_leaf ? b : a;
    }
}

std::optional<PolarCatDecomposition> try_polar_cat(const Graph& g, int v, VertexSet a, VertexSet b,
                                                   bool fat) {
    // (C2) polarizing: slim sides connected, fat sides disconnected.
    bool a_conn = is_connected(g, a | bit(v));
    bool b_conn = is_connected(g, b | bit(v));
    if (fat ? (a_conn || b_conn) : !(a_conn && b_conn)) return std::nullopt;
    auto y = caterpillar_order(g, a | bit(v), v);
    if (!y) return std::nullopt;
    auto z = caterpillar_order(g, b | bit(v), v);
    if (!z) return std::nullopt;
    PolarCatDecomposition d;
    d.pivot = v;
    d.y = *y;
    d.z = *z;
    d.fat = fat;
    if (!(polar_cat_graph(d) == g)) return std::nullopt;
    return d;
}

}  // namespace

std::optional<PolarCatDecomposition> recognize_polar_cat(const Graph& g) {
    int n = g.order();
    if (n < 4 || !is_primitive(g)) return std::nullopt;
    Graph gc = complement(g);
    for (int v = 0; v < n; ++v) {
        VertexSet without = g.vertices() & ~bit(v);
        if (!cograph_within(g, without)) continue;
        for (bool fat : {false, true}) {
            // A primitive pseudo-cograph splits v's removal into exactly two
            // sides (components for slim, co-components for fat).
            std::vector<VertexSet> pieces = components(fat ? gc : g, without);
            if (pieces.size() != 2) continue;
            for (int swap : {0, 1}) {
                VertexSet a = pieces[swap], b = pieces[1 - swap];
                if (auto d = try_polar_cat(g, v, a, b, fat)) return d;
            }
        }
    }
    return std::nullopt;
}

namespace {

Graph quotient_by_children(const Graph& g, const ModularDecomposition& mdt, int id) {
    const auto& children = mdt.nodes[id].children;
    Graph q(static_cast<int>(children.size()));
    for (std::size_t i = 0; i < children.size(); ++i)
        for (std::size_t j = i + 1; j < children.size(); ++j)
            if (g.has_edge(lowest(mdt.nodes[children[i]].module),
                           lowest(mdt.nodes[children[j]].module)))
                q.add_edge(static_cast<int>(i), static_cast<int>(j));
    return q;
}

}  // namespace

AnalysisResult try_analyze_gatex(const Graph& g) {
    AnalysisResult res;
    GatexAnalysis analysis;
    analysis.mdt = build_mdt(g);
    analysis.prime_decomps.resize(analysis.mdt.nodes.size());
    for (std::size_t id = 0; id < analysis.mdt.nodes.size(); ++id) {
        if (analysis.mdt.nodes[id].label != ModuleLabel::Prime) continue;
        Graph q = quotient_by_children(g, analysis.mdt, static_cast<int>(id));
        auto d = recognize_polar_cat(q);
        if (!d) {
            res.failing_module = analysis.mdt.nodes[id].module;
            return res;
        }
        analysis.prime_decomps[id] = std::move(d);
    }
    res.analysis = std::move(analysis);
    return res;
}

GatexAnalysis analyze_gatex(const Graph& g) {
    AnalysisResult res = try_analyze_gatex(g);
    if (!res.analysis)
        throw NotGatexError("graph is not galled-tree explainable", res.failing_module);
    return *std::move(res.analysis);
}

GatexVerdict recognize_gatex_structural(const Graph& g) {
    GatexVerdict verdict;
    AnalysisResult res = try_analyze_gatex(g);
    if (!res.analysis) {
        verdict.failing_module = res.failing_module;
        return verdict;
    }
    LabeledNetwork nt = assemble_pvr(res.analysis->mdt, res.analysis->prime_decomps);
    if (!(explain(nt.net, nt.labels) == g))
        throw std::logic_error("pvr witness failed its explain roundtrip");
    verdict.accepted = true;
    verdict.network = std::move(nt);
    return verdict;
}

GatexVerdict recognize_gatex_forbidden(const Graph& g, const ForbiddenCatalog& catalog) {
    if (catalog.members.empty()) throw std::invalid_argument("empty forbidden catalog");
    GatexVerdict verdict;
    for (int id = 0; id < catalog.size(); ++id) {
        const Graph& pattern = catalog.members[id].graph;
        if (pattern.order() > g.order()) continue;
        auto map = find_induced_embedding(g, pattern);
        if (!map) continue;
        for (int u = 0; u < pattern.order(); ++u)
            for (int v = u + 1; v < pattern.order(); ++v)
                if (pattern.has_edge(u, v) != g.has_edge((*map)[u], (*map)[v]))
                    throw std::logic_error("embedding witness failed verification");
        verdict.embedding = ForbiddenEmbedding{id, *std::move(map)};
        return verdict;
    }
    verdict.accepted = true;
    return verdict;
}

GatexVerdict recognize_gatex_forbidden(const Graph& g) {
    return recognize_gatex_forbidden(g, default_catalog());
}

}  // namespace gatex
