#include "gatex/graph.hpp"

#include <algorithm>

namespace gatex {

std::vector<int> set_to_vector(VertexSet s) {
    std::vector<int> out;
    while (s) {
        int v = lowest(s);
        out.push_back(v);
        s &= s - 1;
    }
    return out;
}

VertexSet vector_to_set(const std::vector<int>& vs) {
    VertexSet s = 0;
    for (int v : vs) {
        if (v < 0 || v >= 64) throw std::invalid_argument("vertex index out of range");
        s |= bit(v);
    }
    return s;
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (int v = 0; v < n_; ++v) twice += static_cast<std::size_t>(degree(v));
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u) {
        VertexSet higher = adj_[u] & ~(full_set(u + 1));
        for (int v : set_to_vector(higher)) out.emplace_back(u, v);
    }
    return out;
}

Graph complement(const Graph& g) {
    int n = g.order();
    Graph out(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) out.add_edge(u, v);
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet w) {
    if (w == 0) throw std::invalid_argument("induced_subgraph: empty vertex set");
    if ((w & ~g.vertices()) != 0) throw std::invalid_argument("induced_subgraph: vertex out of range");
    std::vector<int> verts = set_to_vector(w);
    Graph sub(static_cast<int>(verts.size()));
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (g.has_edge(verts[i], verts[j])) sub.add_edge(static_cast<int>(i), static_cast<int>(j));
    return {std::move(sub), std::move(verts)};
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& w) {
    return induced_subgraph(g, vector_to_set(w));
}

Graph compose(const Graph& g, const Graph& h, ComposeMode mode) {
    int n = g.order() + h.order();
    Graph out(n);
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    for (auto [u, v] : h.edges()) out.add_edge(g.order() + u, g.order() + v);
    if (mode == ComposeMode::Join)
        for (int u = 0; u < g.order(); ++u)
            for (int v = 0; v < h.order(); ++v) out.add_edge(u, g.order() + v);
    return out;
}

std::vector<VertexSet> components(const Graph& g, VertexSet within) {
    std::vector<VertexSet> comps;
    VertexSet left = within;
    while (left) {
        VertexSet comp = bit(lowest(left));
        for (;;) {
            VertexSet grown = comp;
            for (int v : set_to_vector(comp)) grown |= g.neighbors(v) & within;
            if (grown == comp) break;
            comp = grown;
        }
        comps.push_back(comp);
        left &= ~comp;
    }
    return comps;
}

bool is_connected(const Graph& g, VertexSet within) {
    if (within == 0) return false;
    VertexSet comp = bit(lowest(within));
    for (;;) {
        VertexSet grown = comp;
        for (int v : set_to_vector(comp)) grown |= g.neighbors(v) & within;
        if (grown == comp) break;
        comp = grown;
    }
    return comp == within;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph schmerl_graph(int r) {
    if (r < 2) throw std::invalid_argument("schmerl_graph: r must be >= 2");
    if (2 * r > Graph::max_vertices) throw std::invalid_argument("schmerl_graph: too large");
    Graph g(2 * r);
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= i; ++j) g.add_edge(i - 1, r + j - 1);
    return g;
}

}  // namespace gatex
