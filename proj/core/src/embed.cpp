#include "gatex/embed.hpp"

#include <algorithm>
#include <cassert>

namespace gatex {

namespace {

// Forward-checking backtracker: every unplaced pattern vertex keeps a
// bitmask of host candidates, narrowed on each placement by the adjacency
// constraint in both directions (induced embeddings must preserve
// non-edges too).
struct EmbedSearch {
    const Graph& host;
    const Graph& pattern;
    int pn;
    std::vector<int> assign;
    std::vector<VertexSet> cand;
    VertexSet placed = 0;

    EmbedSearch(const Graph& h, const Graph& p)
        : host(h), pattern(p), pn(p.order()), assign(p.order(), -1), cand(p.order(), 0) {
        for (int v = 0; v < pn; ++v) {
            for (int u = 0; u < host.order(); ++u)
                if (host.degree(u) >= pattern.degree(v)) cand[v] |= bit(u);
        }
    }

    bool search(int depth) {
        if (depth == pn) return true;
        int pick = -1, best = 65;
        for (int v = 0; v < pn; ++v) {
            if (placed & bit(v)) continue;
            int count = popcount(cand[v]);
            if (count < best) {
                best = count;
                pick = v;
            }
        }
        std::vector<VertexSet> saved;
        for (VertexSet options = cand[pick]; options; options &= options - 1) {
            int h = lowest(options);
            saved.assign(cand.begin(), cand.end());
            assign[pick] = h;
            placed |= bit(pick);
            bool viable = true;
            for (int q = 0; q < pn && viable; ++q) {
                if (placed & bit(q)) continue;
                cand[q] &= pattern.has_edge(pick, q) ? host.neighbors(h) : ~host.neighbors(h);
                cand[q] &= ~bit(h);
                viable = cand[q] != 0;
            }
            if (viable && search(depth + 1)) return true;
            placed &= ~bit(pick);
            assign[pick] = -1;
            cand = saved;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> find_induced_embedding(const Graph& host, const Graph& pattern) {
    if (pattern.order() > host.order()) return std::nullopt;
    EmbedSearch search(host, pattern);
    if (!search.search(0)) return std::nullopt;
    for (int u = 0; u < pattern.order(); ++u)
        for (int v = u + 1; v < pattern.order(); ++v)
            assert(pattern.has_edge(u, v) == host.has_edge(search.assign[u], search.assign[v]));
    return search.assign;
}

bool has_induced(const Graph& host, const Graph& pattern) {
    return find_induced_embedding(host, pattern).has_value();
}

}  // namespace gatex
