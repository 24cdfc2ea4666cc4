#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gatex {

/// Vertex subsets are bitmasks over the dense 0-based vertex indices.
using VertexSet = std::uint64_t;

inline VertexSet full_set(int n) {
    return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}
inline VertexSet bit(int v) { return VertexSet{1} << v; }
inline int popcount(VertexSet s) { return __builtin_popcountll(s); }
inline int lowest(VertexSet s) { return __builtin_ctzll(s); }

std::vector<int> set_to_vector(VertexSet s);
VertexSet vector_to_set(const std::vector<int>& vs);

/// Simple undirected graph on vertices 0..n-1, stored as adjacency bitmasks.
/// Everything in this library works at desk scale; 64 vertices is the cap.
class Graph {
public:
    static constexpr int max_vertices = 64;

    explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(check_order(n))) {}

    static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    int order() const { return n_; }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("self-loop");
        adj_[u] |= bit(v);
        adj_[v] |= bit(u);
    }

    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1; }
    VertexSet neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return popcount(adj_[v]); }
    VertexSet vertices() const { return full_set(n_); }

    std::size_t edge_count() const;
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph&) const = default;

private:
    static int check_order(int n) {
        if (n < 1 || n > max_vertices)
            throw std::invalid_argument("graph order must be in [1, 64], got " + std::to_string(n));
        return n;
    }
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::invalid_argument("vertex index out of range");
    }

    int n_;
    std::vector<VertexSet> adj_;
};

Graph complement(const Graph& g);

/// Induced subgraph plus the map from new indices back to original vertices.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> vertex_of;  // vertex_of[new index] = original vertex
};

InducedSubgraph induced_subgraph(const Graph& g, VertexSet w);
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& w);

enum class ComposeMode { Union, Join };

/// Disjoint union or join; vertices of h are reindexed after those of g.
Graph compose(const Graph& g, const Graph& h, ComposeMode mode);

/// Connected components of g[within], as vertex masks sorted by lowest member.
std::vector<VertexSet> components(const Graph& g, VertexSet within);
inline std::vector<VertexSet> components(const Graph& g) { return components(g, g.vertices()); }
bool is_connected(const Graph& g, VertexSet within);
inline bool is_connected(const Graph& g) { return is_connected(g, g.vertices()); }

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph empty_graph(int n);

/// Critical-primitive graph on 2r vertices: a_1..a_r, b_1..b_r with
/// a_i ~ b_j exactly when i >= j.  a_i is vertex i-1, b_j is vertex r+j-1.
Graph schmerl_graph(int r);

}  // namespace gatex
