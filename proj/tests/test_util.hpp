#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "gatex/graph.hpp"

namespace gatex::test {

// Isomorphism by exhaustive permutation search; ground truth for the
// canonical-form machinery (small n only).
inline bool perm_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    int n = a.order();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                ok = a.has_edge(u, v) == b.has_edge(perm[u], perm[v]);
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// All modules of g by subset scan (n <= 16 or so).
inline std::vector<VertexSet> all_modules_brute(const Graph& g) {
    std::vector<VertexSet> out;
    VertexSet all = g.vertices();
    for (VertexSet s = 1; s <= all; ++s) {
        if ((s & ~all) != 0) continue;
        bool module = true;
        for (int z : set_to_vector(all & ~s)) {
            VertexSet hit = g.neighbors(z) & s;
            if (hit != 0 && hit != s) {
                module = false;
                break;
            }
        }
        if (module) out.push_back(s);
    }
    return out;
}

inline std::vector<VertexSet> strong_modules_brute(const Graph& g) {
    std::vector<VertexSet> modules = all_modules_brute(g);
    std::vector<VertexSet> strong;
    for (VertexSet m : modules) {
        bool overlaps = false;
        for (VertexSet other : modules) {
            VertexSet meet = m & other;
            if (meet != 0 && meet != m && meet != other) {
                overlaps = true;
                break;
            }
        }
        if (!overlaps) strong.push_back(m);
    }
    std::sort(strong.begin(), strong.end());
    return strong;
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
    Graph g(n);
    std::bernoulli_distribution flip(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (flip(rng)) g.add_edge(u, v);
    return g;
}

inline bool arcs_transitive(const Graph& g, const std::vector<std::pair<int, int>>& arcs) {
    int n = g.order();
    std::vector<std::vector<char>> has(n, std::vector<char>(n, 0));
    for (auto [u, v] : arcs) {
        if (has[u][v] || has[v][u]) return false;  // both directions present
        has[u][v] = 1;
    }
    for (auto [u, v] : arcs)
        if (!g.has_edge(u, v)) return false;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (has[x][y])
                for (int z = 0; z < n; ++z)
                    if (has[y][z] && !has[x][z]) return false;
    return true;
}

}  // namespace gatex::test
