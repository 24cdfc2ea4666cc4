#include "gatex/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace gatex {

namespace {

constexpr int oracle_cap = 20;

void expand(const Graph& g, VertexSet clique, VertexSet candidates, VertexSet& best) {
    if (popcount(clique) > popcount(best)) best = clique;
    if (popcount(clique) + popcount(candidates) <= popcount(best)) return;
    while (candidates) {
        if (popcount(clique) + popcount(candidates) <= popcount(best)) return;
        int v = lowest(candidates);
        candidates &= ~bit(v);
        expand(g, clique | bit(v), candidates & g.neighbors(v), best);
    }
}

// Backtracking k-coloring; a vertex may open at most one new color
// (symmetry break).
bool color_rec(const Graph& g, const std::vector<int>& order, std::vector<int>& color,
               std::size_t idx, int used, int k) {
    if (idx == order.size()) return true;
    int v = order[idx];
    unsigned forbidden = 0;
    for (int u : set_to_vector(g.neighbors(v)))
        if (color[u] >= 0) forbidden |= 1u << color[u];
    int limit = std::min(k, used + 1);
    for (int c = 0; c < limit; ++c) {
        if (forbidden & (1u << c)) continue;
        color[v] = c;
        if (color_rec(g, order, color, idx + 1, std::max(used, c + 1), k)) return true;
        color[v] = -1;
    }
    return false;
}

bool colorable(const Graph& g, const std::vector<int>& order, int k) {
    std::vector<int> color(g.order(), -1);
    return color_rec(g, order, color, 0, 0, k);
}

}  // namespace

VertexSet max_clique_brute(const Graph& g) {
    if (g.order() > oracle_cap) throw std::invalid_argument("oracle refuses n > 20");
    VertexSet best = 0;
    expand(g, 0, g.vertices(), best);
    return best;
}

int chromatic_number_brute(const Graph& g) {
    if (g.order() > oracle_cap) throw std::invalid_argument("oracle refuses n > 20");
    std::vector<int> order(g.order());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
    int lower = popcount(max_clique_brute(g));
    for (int k = lower;; ++k)
        if (colorable(g, order, k)) return k;
}

GraphInvariants brute_force_invariants(const Graph& g) {
    if (g.order() > oracle_cap) throw std::invalid_argument("oracle refuses n > 20");
    GraphInvariants inv{};
    inv.omega = popcount(max_clique_brute(g));
    inv.alpha = popcount(max_clique_brute(complement(g)));
    inv.chi = chromatic_number_brute(g);
    return inv;
}

}  // namespace gatex
