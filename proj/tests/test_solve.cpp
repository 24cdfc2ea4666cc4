#include <random>

#include "doctest.h"
#include "gatex/galled.hpp"
#include "gatex/graph6.hpp"
#include "gatex/oracle.hpp"
#include "gatex/solve.hpp"
#include "test_util.hpp"

using namespace gatex;

namespace {

// The worked cycle example: side (w1, w2) and side (u1, u2, u3) around one
// hybrid, pendant subtree sizes 200/100/50/25/50/75.
LabeledNetwork stub_cycle_network() {
    LabeledNetwork nt;
    auto node = [&](NodeLabel l) {
        nt.net.nodes.emplace_back();
        nt.labels.push_back(l);
        return nt.net.order() - 1;
    };
    auto edge = [&](int p, int c) {
        nt.net.nodes[p].children.push_back(c);
        nt.net.nodes[c].parents.push_back(p);
    };
    auto leaf = [&](int vertex) {
        int v = node(NodeLabel::LeafMark);
        nt.net.nodes[v].leaf_vertex = vertex;
        return v;
    };
    int rho = node(NodeLabel::One);
    int w1 = node(NodeLabel::Zero), w2 = node(NodeLabel::One);
    int u1 = node(NodeLabel::Zero), u2 = node(NodeLabel::One), u3 = node(NodeLabel::Zero);
    int eta = node(NodeLabel::Zero);
    edge(rho, w1);
    edge(w1, w2);
    edge(w2, eta);
    edge(rho, u1);
    edge(u1, u2);
    edge(u2, u3);
    edge(u3, eta);
    edge(w1, leaf(0));  // v_a: 200
    edge(w2, leaf(1));  // v_b: 100
    edge(eta, leaf(2)); // v_c: 50 (the hybrid's subtree)
    edge(u3, leaf(3));  // v_d: 25
    edge(u2, leaf(4));  // v_e: 50
    edge(u1, leaf(5));  // v_f: 75
    nt.net.root = rho;
    return nt;
}

std::vector<VertexSet> max_cliques_brute(const Graph& g, VertexSet within) {
    std::vector<VertexSet> best;
    int best_size = 0;
    std::vector<int> verts = set_to_vector(within);
    for (VertexSet pick = 0; pick < (VertexSet{1} << verts.size()); ++pick) {
        VertexSet s = 0;
        for (std::size_t i = 0; i < verts.size(); ++i)
            if ((pick >> i) & 1) s |= bit(verts[i]);
        bool clique = true;
        for (int u : set_to_vector(s))
            for (int v : set_to_vector(s & ~full_set(u + 1)))
                if (!g.has_edge(u, v)) {
                    clique = false;
                    break;
                }
        if (!clique) continue;
        int size = popcount(s);
        if (size > best_size) {
            best_size = size;
            best.clear();
        }
        if (size == best_size) best.push_back(s);
    }
    return best;
}

Graph random_gatex(int max_leaves, std::mt19937_64& rng) {
    LabeledNetwork nt = random_galled_tree(1 + static_cast<int>(rng() % max_leaves), rng());
    return explain(nt.net, nt.labels);
}

}  // namespace

TEST_CASE("stub cycle reproduces the worked clique value") {
    LabeledNetwork nt = stub_cycle_network();
    CHECK(validate(nt.net, nt.labels).ok);
    // The pendant below u1 is only bounded above by the example; 75 realizes
    // the bound.
    CHECK(clique_size_on_network(nt, {200, 100, 50, 25, 50, 75}) == 275);
}

TEST_CASE("glued cycle value can lose to the eta-avoiding split") {
    // Frozen regression: both cycle sides keep maximum cliques meeting the
    // hybrid leaves, yet the maximum clique of the whole prime module avoids
    // them; the root combination must take the larger of the two values.
    Graph g = graph6_decode("K?o@Hkf}wF_A");
    CHECK(brute_force_invariants(g).omega == 5);
    CHECK(clique_number(g).size == 5);
}

TEST_CASE("solver basics") {
    CliqueResult p4 = clique_number(path_graph(4));
    CHECK(p4.size == 2);
    CHECK(chromatic_number(path_graph(4)).colors == 2);
    CHECK(independence_number(path_graph(4)).size == 2);

    CHECK(clique_number(complete_graph(5)).size == 5);
    CHECK(chromatic_number(complete_graph(5)).colors == 5);
    CHECK(independence_number(complete_graph(5)).size == 1);

    Graph two_k2 = Graph::from_edges(4, {{0, 1}, {2, 3}});
    CHECK(independence_number(two_k2).size == 2);

    CHECK_THROWS_AS(clique_number(cycle_graph(5)), NotGatexError);
    CHECK_THROWS_AS(independence_number(cycle_graph(5)), NotGatexError);
    CHECK_THROWS_AS(chromatic_number(cycle_graph(5)), NotGatexError);
    CHECK_THROWS_AS(transitive_orientation(cycle_graph(5)), NotGatexError);
}

TEST_CASE("solvers match the oracle on random instances") {
    std::mt19937_64 rng(71);
    for (int round = 0; round < 80; ++round) {
        Graph g = random_gatex(12, rng);
        GraphInvariants truth = brute_force_invariants(g);

        CliqueResult clique = clique_number(g);
        CHECK(clique.size == truth.omega);
        for (std::size_t i = 0; i < clique.witness.size(); ++i)
            for (std::size_t j = i + 1; j < clique.witness.size(); ++j)
                CHECK(g.has_edge(clique.witness[i], clique.witness[j]));

        IndependentSetResult ind = independence_number(g);
        CHECK(ind.size == truth.alpha);

        ColoringResult coloring = chromatic_number(g);
        CHECK(coloring.colors == truth.chi);
        for (auto [u, v] : g.edges()) CHECK(coloring.color[u] != coloring.color[v]);

        CHECK(clique.size == independence_number(complement(g)).size);
    }
}

TEST_CASE("transitive orientation") {
    Orientation p4 = transitive_orientation(path_graph(4));
    CHECK(test::arcs_transitive(path_graph(4), p4.arcs));

    Orientation k3 = transitive_orientation(complete_graph(3));
    CHECK(k3.arcs.size() == 3);
    CHECK(test::arcs_transitive(complete_graph(3), k3.arcs));

    std::mt19937_64 rng(73);
    for (int round = 0; round < 60; ++round) {
        Graph g = random_gatex(14, rng);
        CHECK(test::arcs_transitive(g, transitive_orientation(g).arcs));
    }
}

TEST_CASE("perfect order coloring") {
    ColoringResult k2 = perfect_order_coloring(complete_graph(2));
    CHECK(k2.colors == 2);
    ColoringResult p4 = perfect_order_coloring(path_graph(4));
    CHECK(p4.colors == 2);
    CHECK(p4.order.size() == 4);
}

TEST_CASE("cycle dp facts match brute-force clique structure") {
    std::mt19937_64 rng(79);
    int cycles_checked = 0;
    for (int round = 0; round < 200 && cycles_checked < 60; ++round) {
        Graph g = random_gatex(12, rng);
        LabeledNetwork nt = build_pvr(g);
        std::vector<Cycle> cs = cycles(nt.net);
        if (cs.empty()) continue;
        std::vector<CycleCliqueFacts> facts = clique_cycle_facts(nt);
        REQUIRE(facts.size() == cs.size());
        for (std::size_t i = 0; i < cs.size(); ++i) {
            const CycleCliqueFacts& f = facts[i];
            VertexSet module = f.side1_leaves | f.side2_leaves;
            if (popcount(module) > 12) continue;
            ++cycles_checked;

            auto meets = [&](VertexSet side) {
                for (VertexSet k : max_cliques_brute(g, side))
                    if (k & f.eta_leaves) return true;
                return false;
            };
            // Flag semantics: false exactly when no maximum clique of the
            // side subgraph touches the hybrid's leaves.
            CHECK(f.side1_meets_eta == meets(f.side1_leaves));
            CHECK(f.side2_meets_eta == meets(f.side2_leaves));

            auto omega_of = [&](VertexSet within) {
                return within ? popcount(max_cliques_brute(g, within).front()) : 0;
            };
            CHECK(f.omega_cycle == omega_of(module));

            // The exchange property: eta-touching maximum cliques restrict
            // to maximum cliques of the hybrid subgraph, and the eta part is
            // swappable.
            long long omega_eta = omega_of(f.eta_leaves);
            for (VertexSet side : {module, f.side1_leaves}) {
                for (VertexSet k : max_cliques_brute(g, side)) {
                    if (!(k & f.eta_leaves)) continue;
                    CHECK(popcount(k & f.eta_leaves) == omega_eta);
                    for (VertexSet swap : max_cliques_brute(g, f.eta_leaves)) {
                        VertexSet merged = (k & ~f.eta_leaves) | swap;
                        bool clique = true;
                        for (int u : set_to_vector(merged))
                            for (int v : set_to_vector(merged & ~full_set(u + 1)))
                                if (!g.has_edge(u, v)) clique = false;
                        CHECK(clique);
                        CHECK(popcount(merged) == popcount(k));
                    }
                }
            }

            bool rho_series = nt.labels[cs[i].rho] == NodeLabel::One;
            bool module_meets = meets(module);
            long long split = omega_of(f.side1_leaves & ~f.eta_leaves) +
                              omega_of(f.side2_leaves & ~f.eta_leaves);
            if (rho_series) {
                // A module maximum clique meeting the hybrid leaves forces
                // eta-meeting maximum cliques on both sides.  The converse
                // fails: both sides may meet eta while the eta-avoiding
                // split is strictly larger.
                if (module_meets) CHECK((f.side1_meets_eta && f.side2_meets_eta));
                if (f.side1_meets_eta && f.side2_meets_eta) {
                    long long glued = omega_of(f.side1_leaves) + omega_of(f.side2_leaves) -
                                      omega_eta;
                    CHECK(f.omega_cycle == std::max(split, glued));
                    // The glued value is exactly the best eta-meeting clique.
                    long long best_meeting = 0;
                    std::vector<int> verts = set_to_vector(module);
                    for (VertexSet pick = 0; pick < (VertexSet{1} << verts.size()); ++pick) {
                        VertexSet s = 0;
                        for (std::size_t b = 0; b < verts.size(); ++b)
                            if ((pick >> b) & 1) s |= bit(verts[b]);
                        if (!(s & f.eta_leaves)) continue;
                        bool clique = true;
                        for (int u : set_to_vector(s))
                            for (int v : set_to_vector(s & ~full_set(u + 1)))
                                if (!g.has_edge(u, v)) clique = false;
                        if (clique)
                            best_meeting =
                                std::max(best_meeting, static_cast<long long>(popcount(s)));
                    }
                    CHECK(best_meeting == glued);
                } else {
                    CHECK(f.omega_cycle == split);
                    // With a side cut off from eta, maximum cliques decompose
                    // over the two sides minus the hybrid leaves.
                    for (VertexSet k : max_cliques_brute(g, module)) {
                        CHECK((k & f.eta_leaves) == 0);
                        CHECK(popcount(k & f.side1_leaves & ~f.eta_leaves) ==
                              omega_of(f.side1_leaves & ~f.eta_leaves));
                        CHECK(popcount(k & f.side2_leaves & ~f.eta_leaves) ==
                              omega_of(f.side2_leaves & ~f.eta_leaves));
                    }
                }
            } else {
                CHECK(f.omega_cycle ==
                      std::max(omega_of(f.side1_leaves), omega_of(f.side2_leaves)));
            }
        }
    }
    CHECK(cycles_checked >= 30);
}
