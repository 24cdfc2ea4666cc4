#include "gatex/canonical.hpp"

#include <algorithm>
#include <array>

namespace gatex {

namespace {

constexpr int max_canon = 16;

// Cells are stored back to back in order[]; starts[] marks cell boundaries.
// The cell order is kept isomorphism-invariant: refinement splits a cell in
// place, ordering the fragments by ascending neighbor count.
struct Partition {
    std::array<int, max_canon> order;
    std::vector<int> starts;  // cell c = order[starts[c] .. starts[c+1])
    int n;

    int cell_count() const { return static_cast<int>(starts.size()) - 1; }
    int cell_size(int c) const { return starts[c + 1] - starts[c]; }
};

struct Searcher {
    const Graph& g;
    int n;
    bool have_best = false;
    std::array<VertexSet, max_canon> best_rows{};
    std::vector<int> best_perm;

    explicit Searcher(const Graph& graph) : g(graph), n(graph.order()) {}

    void refine(Partition& p) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int s = 0; s < p.cell_count() && !changed; ++s) {
                VertexSet splitter = 0;
                for (int i = p.starts[s]; i < p.starts[s + 1]; ++i) splitter |= bit(p.order[i]);
                for (int c = 0; c < p.cell_count(); ++c) {
                    if (p.cell_size(c) <= 1) continue;
                    int lo = p.starts[c], hi = p.starts[c + 1];
                    std::stable_sort(p.order.begin() + lo, p.order.begin() + hi,
                                     [&](int a, int b) {
                                         return popcount(g.neighbors(a) & splitter) <
                                                popcount(g.neighbors(b) & splitter);
                                     });
                    std::vector<int> cuts;
                    for (int i = lo + 1; i < hi; ++i)
                        if (popcount(g.neighbors(p.order[i]) & splitter) !=
                            popcount(g.neighbors(p.order[i - 1]) & splitter))
                            cuts.push_back(i);
                    if (!cuts.empty()) {
                        p.starts.insert(std::upper_bound(p.starts.begin(), p.starts.end(), lo),
                                        cuts.begin(), cuts.end());
                        changed = true;
                        break;
                    }
                }
            }
        }
    }

    // Swapping two twins (equal neighborhoods away from each other) is an
    // automorphism, so branching on one of them suffices.
    bool twins(int a, int b) const {
        VertexSet off = ~(bit(a) | bit(b));
        return (g.neighbors(a) & off) == (g.neighbors(b) & off);
    }

    void leaf(const Partition& p) {
        std::array<int, max_canon> pos{};
        for (int i = 0; i < n; ++i) pos[p.order[i]] = i;
        std::array<VertexSet, max_canon> rows{};
        for (int i = 0; i < n; ++i) {
            VertexSet row = 0;
            for (int v : set_to_vector(g.neighbors(p.order[i]))) row |= bit(pos[v]);
            rows[i] = row;
        }
        // Any fixed total order over labeled adjacency matrices works for
        // canonicity; we compare the upper-triangle row masks numerically.
        if (have_best) {
            int cmp = 0;
            for (int i = 0; i < n && cmp == 0; ++i) {
                VertexSet upper = rows[i] & ~full_set(i + 1);
                VertexSet best_upper = best_rows[i] & ~full_set(i + 1);
                if (upper != best_upper) cmp = upper < best_upper ? -1 : 1;
            }
            if (cmp >= 0) return;
        }
        have_best = true;
        best_rows = rows;
        best_perm.assign(p.order.begin(), p.order.begin() + n);
    }

    void dfs(Partition p) {
        refine(p);
        int target = -1;
        for (int c = 0; c < p.cell_count(); ++c)
            if (p.cell_size(c) > 1) {
                target = c;
                break;
            }
        if (target < 0) {
            leaf(p);
            return;
        }
        int lo = p.starts[target], hi = p.starts[target + 1];
        for (int i = lo; i < hi; ++i) {
            bool duplicate = false;
            for (int j = lo; j < i && !duplicate; ++j) duplicate = twins(p.order[j], p.order[i]);
            if (duplicate) continue;
            Partition q = p;
            std::rotate(q.order.begin() + lo, q.order.begin() + i, q.order.begin() + i + 1);
            q.starts.insert(std::upper_bound(q.starts.begin(), q.starts.end(), lo), lo + 1);
            dfs(std::move(q));
        }
    }
};

}  // namespace

std::vector<int> canonical_labeling(const Graph& g) {
    int n = g.order();
    if (n > max_canon) throw std::invalid_argument("canonical_labeling supports n <= 16");
    Searcher s(g);
    Partition p;
    p.n = n;
    for (int i = 0; i < n; ++i) p.order[i] = i;
    p.starts = {0, n};
    s.dfs(std::move(p));
    return s.best_perm;
}

CanonicalForm canonical_form(const Graph& g) {
    std::vector<int> perm = canonical_labeling(g);
    int n = g.order();
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[perm[i]] = i;
    CanonicalForm f;
    f.order = n;
    for (auto [u, v] : g.edges()) {
        int a = pos[u], b = pos[v];
        if (a > b) std::swap(a, b);
        f.edges.emplace_back(a, b);
    }
    std::sort(f.edges.begin(), f.edges.end());
    return f;
}

std::uint64_t canonical_key(const Graph& g) {
    int n = g.order();
    if (n > 10) throw std::invalid_argument("canonical_key supports n <= 10");
    CanonicalForm f = canonical_form(g);
    std::uint64_t key = static_cast<std::uint64_t>(n) << 45;
    for (auto [u, v] : f.edges) key |= std::uint64_t{1} << (v * (v - 1) / 2 + u);
    return key;
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace gatex
