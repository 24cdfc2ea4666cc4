#include <random>

#include "doctest.h"
#include "gatex/canonical.hpp"
#include "gatex/enumerate.hpp"
#include "gatex/galled.hpp"
#include "gatex/recognize.hpp"
#include "test_util.hpp"

using namespace gatex;

namespace {

bool witness_holds(const Graph& g, const PseudoCographWitness& w) {
    if (w.degenerate) return g.order() <= 2;
    // (P1)
    if ((w.side1 | w.side2) != g.vertices()) return false;
    if ((w.side1 & w.side2) != bit(w.pivot)) return false;
    if (popcount(w.side1) < 2 || popcount(w.side2) < 2) return false;
    // (P2)
    if (!cograph_within(g, w.side1) || !cograph_within(g, w.side2)) return false;
    // (P3): between the sides minus v, everything (fat) or nothing (slim).
    for (int x : set_to_vector(w.side1 & ~bit(w.pivot)))
        for (int y : set_to_vector(w.side2 & ~bit(w.pivot)))
            if (g.has_edge(x, y) != w.fat) return false;
    return true;
}

}  // namespace

TEST_CASE("is_cograph") {
    CHECK_FALSE(is_cograph(path_graph(4)));
    CHECK_FALSE(is_cograph(cycle_graph(5)));
    Graph built = compose(compose(Graph(1), Graph(1), ComposeMode::Join),
                          compose(Graph(1), Graph(1), ComposeMode::Union), ComposeMode::Join);
    CHECK(is_cograph(built));

    // The cotree explains its graph.
    auto ct = cotree(built);
    REQUIRE(ct.has_value());
    LabeledNetwork nt = assemble_pvr(*ct, {});
    CHECK(explain(nt.net, nt.labels) == built);
    CHECK_FALSE(cotree(path_graph(4)).has_value());

    // P4-freeness and prime-freeness agree exhaustively.
    GraphEnumerator enumerator;
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : enumerator.graphs_of_order(n))
            CHECK(is_cograph(g) == build_mdt(g).is_cotree());
}

TEST_CASE("pseudo-cograph recognition") {
    auto p4 = recognize_pseudo_cograph(path_graph(4));
    REQUIRE(p4.has_value());
    CHECK(witness_holds(path_graph(4), *p4));

    Graph two_p4 = compose(path_graph(4), path_graph(4), ComposeMode::Union);
    CHECK_FALSE(recognize_pseudo_cograph(two_p4).has_value());

    CHECK(recognize_pseudo_cograph(Graph(1)).has_value());
    CHECK(recognize_pseudo_cograph(complete_graph(2)).has_value());
    CHECK_FALSE(recognize_pseudo_cograph(cycle_graph(5)).has_value());
}

TEST_CASE("every cograph is a pseudo-cograph, witnesses verified") {
    GraphEnumerator enumerator;
    for (int n = 3; n <= 6; ++n) {
        for (const Graph& g : enumerator.graphs_of_order(n)) {
            auto w = recognize_pseudo_cograph(g);
            if (is_cograph(g)) REQUIRE(w.has_value());
            if (!w) continue;
            CHECK(witness_holds(g, *w));
            // Necessary condition: g - v is a cograph and g - v or its
            // complement is disconnected.
            VertexSet without = g.vertices() & ~bit(w->pivot);
            CHECK(cograph_within(g, without));
            if (n >= 3) {
                bool disc = components(g, without).size() >= 2;
                bool co_disc = components(complement(g), without).size() >= 2;
                CHECK((disc || co_disc));
            }
        }
    }
}

TEST_CASE("pseudo-cograph recognition matches a brute-force split search") {
    // Independent oracle: try every pivot and every side-1 vertex set.
    auto brute = [](const Graph& g) {
        int n = g.order();
        if (n <= 2) return true;
        for (int v = 0; v < n; ++v) {
            for (VertexSet side1 = 0; side1 <= g.vertices(); ++side1) {
                if ((side1 & ~g.vertices()) || !(side1 & bit(v))) continue;
                VertexSet side2 = (g.vertices() & ~side1) | bit(v);
                if (popcount(side1) < 2 || popcount(side2) < 2) continue;
                if (!cograph_within(g, side1) || !cograph_within(g, side2)) continue;
                bool all = true, none = true;
                for (int x : set_to_vector(side1 & ~bit(v)))
                    for (int y : set_to_vector(side2 & ~bit(v)))
                        (g.has_edge(x, y) ? none : all) = false;
                if (all || none) return true;
            }
        }
        return false;
    };
    GraphEnumerator enumerator;
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : enumerator.graphs_of_order(n))
            CHECK(recognize_pseudo_cograph(g).has_value() == brute(g));
    std::mt19937_64 rng(101);
    for (int round = 0; round < 60; ++round) {
        Graph g = test::random_graph(8, 0.2 + 0.08 * (round % 8), rng);
        CHECK(recognize_pseudo_cograph(g).has_value() == brute(g));
    }
}

TEST_CASE("polar-cat recognition") {
    auto p4 = recognize_polar_cat(path_graph(4));
    REQUIRE(p4.has_value());
    CHECK(polar_cat_graph(*p4) == path_graph(4));

    CHECK_FALSE(recognize_polar_cat(cycle_graph(5)).has_value());
    CHECK_FALSE(recognize_polar_cat(complete_graph(4)).has_value());

    // Exhaustively: polar-cats are exactly the primitive pseudo-cographs.
    GraphEnumerator enumerator;
    for (int n = 4; n <= 7; ++n) {
        for (const Graph& g : enumerator.graphs_of_order(n)) {
            bool expected = is_primitive(g) && recognize_pseudo_cograph(g).has_value();
            auto d = recognize_polar_cat(g);
            CHECK(d.has_value() == expected);
            if (d) CHECK(polar_cat_graph(*d) == g);
        }
    }
}

TEST_CASE("polar-cat decomposition is unique from seven vertices on") {
    std::mt19937_64 rng(97);
    for (int round = 0; round < 120; ++round) {
        int n = 7 + static_cast<int>(rng() % 6);
        std::vector<int> ids(n);
        for (int i = 0; i < n; ++i) ids[i] = i;
        std::shuffle(ids.begin(), ids.end(), rng);
        int ell = 2 + static_cast<int>(rng() % static_cast<unsigned>(n - 2));
        PolarCatDecomposition d;
        d.pivot = ids[n - 1];
        d.y.assign(ids.begin(), ids.begin() + (ell - 1));
        d.y.push_back(d.pivot);
        d.z.assign(ids.begin() + (ell - 1), ids.end() - 1);
        d.z.push_back(d.pivot);
        d.fat = rng() % 2 == 1;

        auto r = recognize_polar_cat(polar_cat_graph(d));
        REQUIRE(r.has_value());
        CHECK(r->pivot == d.pivot);
        CHECK(r->fat == d.fat);
        bool straight = r->y == d.y && r->z == d.z;
        bool swapped = r->y == d.z && r->z == d.y;
        CHECK((straight || swapped));
    }
}

TEST_CASE("structural recognizer") {
    GatexVerdict cograph = recognize_gatex_structural(complete_graph(3));
    CHECK(cograph.accepted);
    REQUIRE(cograph.network.has_value());
    CHECK(explain(cograph.network->net, cograph.network->labels) == complete_graph(3));

    GatexVerdict c5 = recognize_gatex_structural(cycle_graph(5));
    CHECK_FALSE(c5.accepted);
    REQUIRE(c5.failing_module.has_value());
    CHECK(*c5.failing_module == cycle_graph(5).vertices());

    std::mt19937_64 rng(61);
    for (int round = 0; round < 60; ++round) {
        LabeledNetwork nt = random_galled_tree(1 + static_cast<int>(rng() % 25), rng());
        Graph g = explain(nt.net, nt.labels);
        CHECK(recognize_gatex_structural(g).accepted);
    }
}

TEST_CASE("forbidden recognizer") {
    const ForbiddenCatalog& catalog = default_catalog();

    GatexVerdict c5 = recognize_gatex_forbidden(cycle_graph(5), catalog);
    CHECK_FALSE(c5.accepted);
    REQUIRE(c5.embedding.has_value());
    CHECK(c5.embedding->catalog_id == 0);  // F0 is the 5-cycle

    CHECK_FALSE(recognize_gatex_forbidden(cycle_graph(6), catalog).accepted);
    CHECK(recognize_gatex_forbidden(path_graph(4), catalog).accepted);

    ForbiddenCatalog empty;
    CHECK_THROWS_AS(recognize_gatex_forbidden(path_graph(4), empty), std::invalid_argument);
}

TEST_CASE("backends agree on all graphs with n <= 6") {
    const ForbiddenCatalog& catalog = default_catalog();
    GraphEnumerator enumerator;
    for (int n = 1; n <= 6; ++n) {
        for (const Graph& g : enumerator.graphs_of_order(n)) {
            bool structural = recognize_gatex_structural(g).accepted;
            bool forbidden = recognize_gatex_forbidden(g, catalog).accepted;
            CHECK(structural == forbidden);
            // Complement closure.
            CHECK(structural == recognize_gatex_structural(complement(g)).accepted);
        }
    }
}

TEST_CASE("acceptance is heritable") {
    std::mt19937_64 rng(67);
    int accepted_seen = 0;
    for (int round = 0; round < 80; ++round) {
        Graph g = test::random_graph(8, 0.25 + 0.05 * (round % 8), rng);
        if (!recognize_gatex_structural(g).accepted) continue;
        ++accepted_seen;
        for (int v = 0; v < g.order(); ++v) {
            if (g.order() == 1) break;
            Graph h = induced_subgraph(g, g.vertices() & ~bit(v)).graph;
            CHECK(recognize_gatex_structural(h).accepted);
        }
    }
    CHECK(accepted_seen > 0);
}
