#include "gatex/twinwidth.hpp"

#include <algorithm>
#include <stdexcept>

#include "gatex/recognize.hpp"

namespace gatex {

Trigraph Trigraph::from_graph(const Graph& g) {
    Trigraph t;
    t.n = g.order();
    t.black.resize(t.n);
    t.red.assign(t.n, 0);
    for (int v = 0; v < t.n; ++v) t.black[v] = g.neighbors(v);
    t.alive = g.vertices();
    return t;
}

int Trigraph::max_red_degree() const {
    int best = 0;
    for (int v : set_to_vector(alive)) best = std::max(best, red_degree(v));
    return best;
}

Trigraph contract(const Trigraph& t, int u, int v) {
    if (u == v) throw std::invalid_argument("contract: vertices must differ");
    if (!t.has_vertex(u) || !t.has_vertex(v)) throw std::invalid_argument("contract: dead vertex");
    int keep = std::min(u, v), gone = std::max(u, v);
    Trigraph out = t;
    out.alive &= ~bit(gone);
    VertexSet others = out.alive & ~bit(keep);
    VertexSet both_black = t.black[u] & t.black[v] & others;
    VertexSet any = (t.black[u] | t.red[u] | t.black[v] | t.red[v]) & others;
    out.black[keep] = both_black;
    out.red[keep] = any & ~both_black;
    for (int x = 0; x < t.n; ++x) {
        if (x == keep) continue;
        out.black[x] &= ~(bit(u) | bit(v));
        out.red[x] &= ~(bit(u) | bit(v));
        if (out.black[keep] & bit(x)) out.black[x] |= bit(keep);
        if (out.red[keep] & bit(x)) out.red[x] |= bit(keep);
    }
    out.black[gone] = out.red[gone] = 0;
    return out;
}

namespace {

struct SequenceBuilder {
    Trigraph tri;
    ContractionSequence seq;
    int bound;  // asserted after every merge

    // Returns the surviving name.
    int merge(int u, int v) {
        seq.merges.emplace_back(u, v);
        tri = contract(tri, u, v);
        int red = tri.max_red_degree();
        seq.width = std::max(seq.width, red);
        if (red > bound)
            throw std::logic_error("contraction schedule exceeded the intended width");
        return std::min(u, v);
    }

    // Two-phase schedule on a polar-cat quotient, written for the slim edge
    // pattern; the same merges work verbatim on a fat quotient because
    // contraction redness depends only on neighborhood symmetric
    // differences, which complementing preserves.
    int contract_polar_cat(const PolarCatDecomposition& d, const std::vector<int>& rep) {
        std::vector<int> y, z;
        for (std::size_t i = 0; i + 1 < d.y.size(); ++i) y.push_back(rep[d.y[i]]);
        for (std::size_t i = 0; i + 1 < d.z.size(); ++i) z.push_back(rep[d.z[i]]);
        int pivot = rep[d.pivot];
        y.push_back(pivot);
        z.push_back(pivot);

        // Phase 1: fold Y down to (y1, v).
        while (y.size() > 2) {
            if (y.size() == 3) {
                y[0] = merge(y[0], y[1]);
                y.erase(y.begin() + 1);
            } else {
                y[0] = merge(y[0], y[2]);
                y.erase(y.begin() + 2);
                if (y.size() >= 4) {
                    y[1] = merge(y[1], y[2]);
                    y.erase(y.begin() + 2);
                }
            }
        }
        // Phase 2: absorb Z into the pivot from the bottom, then close.
        while (z.size() >= 2) {
            int m = static_cast<int>(z.size());
            int merged = merge(z[m - 2], z[m - 1]);
            z.erase(z.begin() + (m - 2));
            z.back() = merged;
        }
        return merge(y[0], z[0]);
    }
};

}  // namespace

ContractionSequence build_one_contraction_sequence(const Graph& g) {
    GatexAnalysis analysis = analyze_gatex(g);
    SequenceBuilder builder{Trigraph::from_graph(g), {}, analysis.mdt.is_cotree() ? 0 : 1};
    std::vector<int> rep(analysis.mdt.nodes.size(), -1);
    for (int id : analysis.mdt.postorder()) {
        const auto& node = analysis.mdt.nodes[id];
        if (node.label == ModuleLabel::Leaf) {
            rep[id] = lowest(node.module);
            continue;
        }
        std::vector<int> child_reps;
        for (int c : node.children) child_reps.push_back(rep[c]);
        if (node.label == ModuleLabel::Prime) {
            rep[id] = builder.contract_polar_cat(*analysis.prime_decomps[id], child_reps);
        } else {
            // Sibling representatives are twins in the working trigraph.
            std::sort(child_reps.begin(), child_reps.end());
            int acc = child_reps[0];
            for (std::size_t i = 1; i < child_reps.size(); ++i) acc = builder.merge(acc, child_reps[i]);
            rep[id] = acc;
        }
    }
    if (popcount(builder.tri.alive) != 1)
        throw std::logic_error("contraction schedule did not reach a single vertex");
    return builder.seq;
}

}  // namespace gatex
