#include <random>

#include "doctest.h"
#include "gatex/canonical.hpp"
#include "gatex/embed.hpp"
#include "gatex/enumerate.hpp"
#include "gatex/modular.hpp"
#include "test_util.hpp"

using namespace gatex;

namespace {

Graph quotient_at(const Graph& g, const ModularDecomposition& mdt, int id) {
    InducedSubgraph sub = induced_subgraph(g, mdt.nodes[id].module);
    std::vector<int> new_index(g.order(), -1);
    for (std::size_t i = 0; i < sub.vertex_of.size(); ++i) new_index[sub.vertex_of[i]] = static_cast<int>(i);
    std::vector<VertexSet> parts;
    for (int c : mdt.nodes[id].children) {
        VertexSet part = 0;
        for (int v : set_to_vector(mdt.nodes[c].module)) part |= bit(new_index[v]);
        parts.push_back(part);
    }
    return quotient(sub.graph, parts);
}

}  // namespace

TEST_CASE("is_module") {
    Graph p4 = path_graph(4);
    for (int v = 0; v < 4; ++v) CHECK(is_module(p4, bit(v)));
    CHECK(is_module(p4, p4.vertices()));
    CHECK_FALSE(is_module(p4, vector_to_set({1, 2})));
    Graph k3 = complete_graph(3);
    CHECK(is_module(k3, vector_to_set({0, 1})));
    CHECK(is_module(k3, vector_to_set({1, 2})));
    CHECK_THROWS_AS(is_module(p4, 0), std::invalid_argument);
}

TEST_CASE("strong modules") {
    Graph p4 = path_graph(4);
    CHECK(strong_modules(p4) ==
          std::vector<VertexSet>{bit(0), bit(1), bit(2), bit(3), p4.vertices()});

    Graph two_k2 = Graph::from_edges(4, {{0, 1}, {2, 3}});
    CHECK(strong_modules(two_k2) ==
          std::vector<VertexSet>{bit(0), bit(1), vector_to_set({0, 1}), bit(2), bit(3),
                                 vector_to_set({2, 3}), two_k2.vertices()});

    CHECK(strong_modules(Graph(1)) == std::vector<VertexSet>{bit(0)});
}

TEST_CASE("modules and strong modules match the subset-scan oracle exhaustively") {
    GraphEnumerator enumerator;
    for (int n = 1; n <= 7; ++n) {
        for (const Graph& g : enumerator.graphs_of_order(n)) {
            for (VertexSet s : test::all_modules_brute(g)) CHECK(is_module(g, s));
            CHECK(strong_modules(g) == test::strong_modules_brute(g));
        }
    }
    std::mt19937_64 rng(31);
    for (int round = 0; round < 40; ++round) {
        Graph g = test::random_graph(8, 0.3 + 0.05 * (round % 9), rng);
        CHECK(strong_modules(g) == test::strong_modules_brute(g));
    }
}

TEST_CASE("mdt shapes") {
    ModularDecomposition p4 = build_mdt(path_graph(4));
    CHECK(p4.nodes[p4.root].label == ModuleLabel::Prime);
    CHECK(p4.nodes[p4.root].children.size() == 4);
    CHECK(p4.prime_count() == 1);

    ModularDecomposition k2 = build_mdt(complete_graph(2));
    CHECK(k2.nodes[k2.root].label == ModuleLabel::Series);
    CHECK(k2.nodes[k2.root].children.size() == 2);

    // Recursive join/union builds have prime-free trees.
    Graph cograph = compose(compose(Graph(1), path_graph(2), ComposeMode::Join),
                            compose(Graph(1), Graph(1), ComposeMode::Union), ComposeMode::Union);
    CHECK(build_mdt(cograph).is_cotree());

    ModularDecomposition leaf = build_mdt(Graph(1));
    CHECK(leaf.nodes.size() == 1);
    CHECK(leaf.nodes[0].label == ModuleLabel::Leaf);
}

TEST_CASE("mdt structural invariants over all graphs with n <= 6") {
    GraphEnumerator enumerator;
    for (int n = 1; n <= 6; ++n) {
        for (const Graph& g : enumerator.graphs_of_order(n)) {
            ModularDecomposition mdt = build_mdt(g);
            CHECK(mdt.nodes[mdt.root].module == g.vertices());
            int leaves = 0;
            for (std::size_t id = 0; id < mdt.nodes.size(); ++id) {
                const auto& node = mdt.nodes[id];
                if (node.label == ModuleLabel::Leaf) {
                    CHECK(popcount(node.module) == 1);
                    ++leaves;
                    continue;
                }
                CHECK(node.children.size() >= 2);
                VertexSet together = 0;
                for (int c : node.children) {
                    CHECK((mdt.nodes[c].module & together) == 0);
                    together |= mdt.nodes[c].module;
                    // No 0-labeled child of a 0-labeled node; same for 1.
                    if (mdt.nodes[c].label != ModuleLabel::Prime &&
                        mdt.nodes[c].label != ModuleLabel::Leaf)
                        CHECK(mdt.nodes[c].label != node.label);
                }
                CHECK(together == node.module);
                if (node.label == ModuleLabel::Prime) {
                    Graph q = quotient_at(g, mdt, static_cast<int>(id));
                    CHECK(is_primitive(q));
                }
            }
            CHECK(leaves == n);
        }
    }
}

TEST_CASE("quotient") {
    Graph two_k2 = Graph::from_edges(4, {{0, 1}, {2, 3}});
    Graph q = quotient(two_k2, {vector_to_set({0, 1}), vector_to_set({2, 3})});
    CHECK(q == Graph(2));

    Graph c5 = cycle_graph(5);
    std::vector<VertexSet> singletons;
    for (int v = 0; v < 5; ++v) singletons.push_back(bit(v));
    CHECK(quotient(c5, singletons) == c5);

    CHECK_THROWS_AS(quotient(c5, {vector_to_set({0, 1}), vector_to_set({2, 3, 4})}),
                    std::invalid_argument);  // parts are not modules
    Graph p4 = path_graph(4);
    CHECK_THROWS_AS(quotient(p4, {vector_to_set({0, 1, 2})}), std::invalid_argument);
}

TEST_CASE("quotient by maximal strong modules is a transversal subgraph") {
    std::mt19937_64 rng(37);
    for (int round = 0; round < 50; ++round) {
        Graph g = test::random_graph(4 + static_cast<int>(rng() % 7), 0.25 + 0.07 * (round % 8), rng);
        ModularDecomposition mdt = build_mdt(g);
        if (mdt.nodes[mdt.root].label == ModuleLabel::Leaf) continue;
        std::vector<VertexSet> parts;
        VertexSet transversal = 0;
        for (int c : mdt.nodes[mdt.root].children) {
            parts.push_back(mdt.nodes[c].module);
            transversal |= bit(lowest(mdt.nodes[c].module));
        }
        Graph q = quotient(g, parts);
        CHECK(isomorphic(q, induced_subgraph(g, transversal).graph));
    }
}

TEST_CASE("minimal strong module containing a primitive subgraph is prime") {
    std::mt19937_64 rng(41);
    int checked = 0;
    for (int round = 0; round < 200 && checked < 40; ++round) {
        Graph g = test::random_graph(9, 0.45, rng);
        auto embedding = find_induced_embedding(g, path_graph(4));
        if (!embedding) continue;
        VertexSet target = vector_to_set(*embedding);
        ModularDecomposition mdt = build_mdt(g);
        VertexSet best = g.vertices();
        int best_id = mdt.root;
        for (std::size_t id = 0; id < mdt.nodes.size(); ++id)
            if ((target & ~mdt.nodes[id].module) == 0 &&
                popcount(mdt.nodes[id].module) < popcount(best)) {
                best = mdt.nodes[id].module;
                best_id = static_cast<int>(id);
            }
        CHECK(mdt.nodes[best_id].label == ModuleLabel::Prime);
        ++checked;
    }
    CHECK(checked > 0);
}
