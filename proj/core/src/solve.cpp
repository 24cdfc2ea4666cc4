#include "gatex/solve.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "gatex/recognize.hpp"

namespace gatex {

namespace {

// Postorder clique DP over a pvr-form network (Algorithm-2 shape): tree
// vertices take max (label 0) or sum (label 1) over children; cycle sides
// are walked bottom-up carrying both omega and the eta-avoiding variant,
// plus the per-side flag telling whether some maximum clique of the side
// still meets the hybrid's leaf set.
struct CliqueDp {
    const GalledTree& net;
    const Labeling& t;

    // per node
    std::vector<long long> omega, omega_noeta;
    std::vector<char> incl;          // side nodes: max clique meets L_eta
    std::vector<int> cycle_of;       // cycle index or -1
    std::vector<int> on_cycle_child; // side nodes: their child on the cycle
    std::vector<int> off_cycle_child;
    std::vector<Cycle> cyc;
    std::vector<int> role;  // 0 none, 1 rho, 2 eta, 3 side

    CliqueDp(const GalledTree& n, const Labeling& labels) : net(n), t(labels) {
        int v = net.order();
        omega.assign(v, 0);
        omega_noeta.assign(v, 0);
        incl.assign(v, 1);
        cycle_of.assign(v, -1);
        on_cycle_child.assign(v, -1);
        off_cycle_child.assign(v, -1);
        role.assign(v, 0);
        cyc = cycles(net);
        for (std::size_t c = 0; c < cyc.size(); ++c) index_cycle(static_cast<int>(c));
    }

    void index_cycle(int c) {
        const Cycle& cycle = cyc[c];
        claim(cycle.rho, c, 1);
        claim(cycle.eta, c, 2);
        if (net.nodes[cycle.eta].children.size() != 1)
            throw std::invalid_argument("clique dp needs hybrids with a single child");
        if (cycle.side1.empty() || cycle.side2.empty())
            throw std::invalid_argument("clique dp needs strong cycles");
        for (const std::vector<int>& side : {cycle.side1, cycle.side2}) {
            for (std::size_t i = 0; i < side.size(); ++i) {
                int w = side[i];
                claim(w, c, 3);
                int below = i + 1 < side.size() ? side[i + 1] : cycle.eta;
                const auto& ch = net.nodes[w].children;
                if (ch.size() != 2)
                    throw std::invalid_argument("cycle vertices need exactly two children");
                if (ch[0] != below && ch[1] != below)
                    throw std::invalid_argument("cycle side is not chained");
                on_cycle_child[w] = below;
                off_cycle_child[w] = ch[0] == below ? ch[1] : ch[0];
            }
        }
        if (net.nodes[cycle.rho].children.size() != 2)
            throw std::invalid_argument("cycle roots need exactly two children");
    }

    void claim(int v, int c, int r) {
        if (role[v] != 0) throw std::invalid_argument("network cycles share vertices");
        role[v] = r;
        cycle_of[v] = c;
    }

    void run(const std::vector<long long>& leaf_values) {
        std::vector<int> topo = net.topo_order();
        for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
            int v = *it;
            if (net.is_leaf(v)) {
                omega[v] = leaf_values[net.nodes[v].leaf_vertex];
                omega_noeta[v] = omega[v];
                continue;
            }
            if (role[v] == 2 || role[v] == 3) continue;  // handled at the cycle root
            if (role[v] == 1) {
                run_cycle(cycle_of[v]);
                continue;
            }
            const auto& ch = net.nodes[v].children;
            if (t[v] == NodeLabel::One) {
                long long sum = 0;
                for (int c : ch) sum += omega[c];
                omega[v] = sum;
            } else {
                long long best = 0;
                for (int c : ch) best = std::max(best, omega[c]);
                omega[v] = best;
            }
        }
    }

    void run_cycle(int c) {
        const Cycle& cycle = cyc[c];
        int eta = cycle.eta;
        long long omega_eta = omega[net.nodes[eta].children[0]];
        omega[eta] = omega_eta;

        for (const std::vector<int>& side : {cycle.side1, cycle.side2}) {
            for (auto it = side.rbegin(); it != side.rend(); ++it) {
                int w = *it;
                int up = on_cycle_child[w];   // next vertex down the side (or eta)
                int uo = off_cycle_child[w];  // pendant subtree
                if (up == eta) {
                    omega_noeta[w] = omega[uo];
                    if (t[w] == NodeLabel::One) {
                        omega[w] = omega_eta + omega[uo];
                        incl[w] = 1;
                    } else {
                        omega[w] = std::max(omega_eta, omega[uo]);
                        incl[w] = omega_eta >= omega[uo];
                    }
                } else if (t[w] == NodeLabel::One) {
                    omega[w] = omega[up] + omega[uo];
                    omega_noeta[w] = omega_noeta[up] + omega[uo];
                    incl[w] = incl[up];
                } else {
                    omega[w] = std::max(omega[up], omega[uo]);
                    omega_noeta[w] = std::max(omega_noeta[up], omega[uo]);
                    incl[w] = omega[up] >= omega[uo] && incl[up];
                }
            }
        }

        int rho = cycle.rho;
        int u1 = cycle.side1.front(), u2 = cycle.side2.front();
        if (t[rho] == NodeLabel::Zero) {
            omega[rho] = std::max(omega[u1], omega[u2]);
        } else {
            // The eta-avoiding split is always available; when both sides
            // keep maximum cliques meeting L_eta, gluing them through a
            // maximum clique of the hybrid subgraph is too.  The glued value
            // alone can undercount: a side may reach its clique number both
            // with and without L_eta, and then the split wins.
            omega[rho] = omega_noeta[u1] + omega_noeta[u2];
            if (incl[u1] && incl[u2])
                omega[rho] = std::max(omega[rho], omega[u1] + omega[u2] - omega_eta);
        }
        omega_noeta[rho] = omega[rho];
    }

    enum Mode { Uncon, NoEta, WithEta };

    void collect(int v, Mode mode, std::vector<int>& out) const {
        if (net.is_leaf(v)) {
            out.push_back(net.nodes[v].leaf_vertex);
            return;
        }
        if (role[v] == 1) {
            collect_rho(v, out);
            return;
        }
        if (role[v] == 2) {
            collect(net.nodes[v].children[0], Uncon, out);
            return;
        }
        if (role[v] == 3) {
            collect_side(v, mode, out);
            return;
        }
        const auto& ch = net.nodes[v].children;
        if (t[v] == NodeLabel::One) {
            for (int c : ch) collect(c, Uncon, out);
        } else {
            int pick = ch.front();
            for (int c : ch)
                if (omega[c] > omega[pick]) pick = c;
            collect(pick, Uncon, out);
        }
    }

    void collect_rho(int rho, std::vector<int>& out) const {
        const Cycle& cycle = cyc[cycle_of[rho]];
        int u1 = cycle.side1.front(), u2 = cycle.side2.front();
        if (t[rho] == NodeLabel::Zero) {
            collect(omega[u1] >= omega[u2] ? u1 : u2, Uncon, out);
            return;
        }
        long long eta_value = omega[cycle.eta];
        bool glued = incl[u1] && incl[u2] &&
                     omega[u1] + omega[u2] - eta_value >= omega_noeta[u1] + omega_noeta[u2];
        if (glued) {
            // Both eta parts resolve to the identical hybrid-subtree witness,
            // so the union double-counts it exactly once.
            collect(u1, WithEta, out);
            collect(u2, WithEta, out);
            std::sort(out.begin(), out.end());
            out.erase(std::unique(out.begin(), out.end()), out.end());
        } else {
            collect(u1, NoEta, out);
            collect(u2, NoEta, out);
        }
    }

    void collect_side(int w, Mode mode, std::vector<int>& out) const {
        int up = on_cycle_child[w];
        int uo = off_cycle_child[w];
        bool parent_of_eta = role[up] == 2;
        bool one = t[w] == NodeLabel::One;
        switch (mode) {
            case Uncon:
                if (one) {
                    collect(up, Uncon, out);
                    collect(uo, Uncon, out);
                } else {
                    collect(omega[up] >= omega[uo] ? up : uo, Uncon, out);
                }
                break;
            case NoEta:
                if (parent_of_eta) {
                    collect(uo, Uncon, out);  // omega_noeta(w) = omega(u'') here
                } else if (one) {
                    collect(up, NoEta, out);
                    collect(uo, Uncon, out);
                } else {
                    if (omega_noeta[up] >= omega[uo])
                        collect(up, NoEta, out);
                    else
                        collect(uo, Uncon, out);
                }
                break;
            case WithEta:
                if (one) {
                    collect(up, parent_of_eta ? Uncon : WithEta, out);
                    collect(uo, Uncon, out);
                } else {
                    // incl(w) guarantees the cycle child carries a maximum
                    // clique meeting L_eta.
                    collect(up, parent_of_eta ? Uncon : WithEta, out);
                }
                break;
        }
    }
};

std::vector<long long> unit_values(const GalledTree& net) {
    return std::vector<long long>(static_cast<std::size_t>(net.leaf_count()), 1);
}

}  // namespace

long long clique_size_on_network(const LabeledNetwork& nt, const std::vector<long long>& leaf_values) {
    if (leaf_values.size() != static_cast<std::size_t>(nt.net.leaf_count()))
        throw std::invalid_argument("leaf value count mismatch");
    CliqueDp dp(nt.net, nt.labels);
    dp.run(leaf_values);
    return dp.omega[nt.net.root];
}

std::vector<int> clique_leaves_on_network(const LabeledNetwork& nt) {
    CliqueDp dp(nt.net, nt.labels);
    dp.run(unit_values(nt.net));
    std::vector<int> out;
    dp.collect(nt.net.root, CliqueDp::Uncon, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (static_cast<long long>(out.size()) != dp.omega[nt.net.root])
        throw std::logic_error("witness size disagrees with the dp value");
    return out;
}

std::vector<CycleCliqueFacts> clique_cycle_facts(const LabeledNetwork& nt) {
    CliqueDp dp(nt.net, nt.labels);
    dp.run(unit_values(nt.net));
    std::vector<VertexSet> below(nt.net.order(), 0);
    std::vector<int> topo = nt.net.topo_order();
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        int v = *it;
        if (nt.net.is_leaf(v)) below[v] = bit(nt.net.nodes[v].leaf_vertex);
        for (int c : nt.net.nodes[v].children) below[v] |= below[c];
    }
    std::vector<CycleCliqueFacts> out;
    for (const Cycle& c : dp.cyc) {
        CycleCliqueFacts facts;
        facts.side1_leaves = below[c.side1.front()];
        facts.side2_leaves = below[c.side2.front()];
        facts.eta_leaves = below[c.eta];
        facts.side1_meets_eta = dp.incl[c.side1.front()];
        facts.side2_meets_eta = dp.incl[c.side2.front()];
        facts.omega_cycle = dp.omega[c.rho];
        out.push_back(facts);
    }
    return out;
}

CliqueResult clique_number(const Graph& g) {
    LabeledNetwork nt = build_pvr(g);
    std::vector<int> witness = clique_leaves_on_network(nt);
    for (std::size_t i = 0; i < witness.size(); ++i)
        for (std::size_t j = i + 1; j < witness.size(); ++j)
            if (!g.has_edge(witness[i], witness[j]))
                throw std::logic_error("clique witness is not a clique");
    return {static_cast<int>(witness.size()), std::move(witness)};
}

IndependentSetResult independence_number(const Graph& g) {
    LabeledNetwork nt = build_pvr(g);
    nt.labels = flip_labels(nt.labels);
    std::vector<int> witness = clique_leaves_on_network(nt);
    for (std::size_t i = 0; i < witness.size(); ++i)
        for (std::size_t j = i + 1; j < witness.size(); ++j)
            if (g.has_edge(witness[i], witness[j]))
                throw std::logic_error("independent-set witness has an edge");
    return {static_cast<int>(witness.size()), std::move(witness)};
}

namespace {

// Quotient arcs for one MDT node, as child-index pairs.
std::vector<std::pair<int, int>> node_arcs(const ModularDecomposition& mdt, int id,
                                           const std::optional<PolarCatDecomposition>& decomp) {
    const auto& node = mdt.nodes[id];
    std::vector<std::pair<int, int>> arcs;
    if (node.label == ModuleLabel::Series) {
        int k = static_cast<int>(node.children.size());
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) arcs.emplace_back(i, j);
        return arcs;
    }
    if (node.label != ModuleLabel::Prime) return arcs;
    const PolarCatDecomposition& d = *decomp;
    auto fan = [&](const std::vector<int>& side, bool reversed) {
        for (std::size_t i = 1; i <= side.size(); ++i) {
            bool emits = d.fat ? i % 2 == 0 : i % 2 == 1;
            if (!emits) continue;
            for (std::size_t j = i + 1; j <= side.size(); ++j) {
                if (reversed)
                    arcs.emplace_back(side[j - 1], side[i - 1]);
                else
                    arcs.emplace_back(side[i - 1], side[j - 1]);
            }
        }
    };
    // Slim: both fans ascending.  Fat: the z fan reversed plus all cross
    // arcs from Y to Z.
    fan(d.y, false);
    fan(d.z, d.fat);
    if (d.fat)
        for (std::size_t i = 0; i + 1 < d.y.size(); ++i)
            for (std::size_t j = 0; j + 1 < d.z.size(); ++j) arcs.emplace_back(d.y[i], d.z[j]);
    return arcs;
}

}  // namespace

Orientation transitive_orientation(const Graph& g) {
    GatexAnalysis analysis = analyze_gatex(g);
    Orientation out;
    for (std::size_t id = 0; id < analysis.mdt.nodes.size(); ++id) {
        const auto& node = analysis.mdt.nodes[id];
        if (node.label == ModuleLabel::Leaf || node.label == ModuleLabel::Parallel) continue;
        for (auto [i, j] : node_arcs(analysis.mdt, static_cast<int>(id),
                                     analysis.prime_decomps[id])) {
            VertexSet from = analysis.mdt.nodes[node.children[i]].module;
            VertexSet to = analysis.mdt.nodes[node.children[j]].module;
            for (int x : set_to_vector(from))
                for (int y : set_to_vector(to)) out.arcs.emplace_back(x, y);
        }
    }
    if (out.arcs.size() != g.edge_count())
        throw std::logic_error("orientation does not cover the edge set exactly");
    std::sort(out.arcs.begin(), out.arcs.end());
    return out;
}

ColoringResult perfect_order_coloring(const Graph& g) {
    Orientation orientation = transitive_orientation(g);
    int n = g.order();
    std::vector<int> indeg(n, 0);
    std::vector<std::vector<int>> outs(n);
    for (auto [x, y] : orientation.arcs) {
        ++indeg[y];
        outs[x].push_back(y);
    }
    ColoringResult res;
    res.color.assign(n, -1);
    std::vector<int> queue;
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) queue.push_back(v);
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        res.order.push_back(v);
        for (int w : outs[v])
            if (--indeg[w] == 0) queue.push_back(w);
    }
    if (res.order.size() != static_cast<std::size_t>(n))
        throw std::logic_error("transitive orientation is cyclic");
    for (int v : res.order) {
        std::uint64_t used = 0;
        for (int u : set_to_vector(g.neighbors(v)))
            if (res.color[u] >= 0) used |= std::uint64_t{1} << res.color[u];
        int c = 0;
        while ((used >> c) & 1) ++c;
        res.color[v] = c;
        res.colors = std::max(res.colors, c + 1);
    }
    return res;
}

ColoringResult chromatic_number(const Graph& g) {
    CliqueResult clique = clique_number(g);
    ColoringResult coloring = perfect_order_coloring(g);
    if (coloring.colors != clique.size)
        throw std::logic_error("greedy perfect-order coloring missed the clique number");
    return coloring;
}

SolveSummary solve_all(const Graph& g) {
    SolveSummary s;
    s.clique = clique_number(g);
    s.independent_set = independence_number(g);
    s.orientation = transitive_orientation(g);
    s.coloring = chromatic_number(g);
    return s;
}

}  // namespace gatex
