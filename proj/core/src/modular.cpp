#include "gatex/modular.hpp"

#include <algorithm>
#include <stdexcept>

namespace gatex {

bool ModularDecomposition::is_cotree() const { return prime_count() == 0; }

int ModularDecomposition::prime_count() const {
    int count = 0;
    for (const Node& node : nodes) count += node.label == ModuleLabel::Prime;
    return count;
}

std::vector<int> ModularDecomposition::postorder() const {
    std::vector<int> out;
    std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
    while (!stack.empty()) {
        auto& [id, next] = stack.back();
        if (next < nodes[id].children.size()) {
            int child = nodes[id].children[next++];
            stack.emplace_back(child, 0);
        } else {
            out.push_back(id);
            stack.pop_back();
        }
    }
    return out;
}

bool is_module(const Graph& g, VertexSet s) {
    if (s == 0) throw std::invalid_argument("is_module: empty set");
    if ((s & ~g.vertices()) != 0) throw std::invalid_argument("is_module: vertex out of range");
    for (int z : set_to_vector(g.vertices() & ~s)) {
        VertexSet hit = g.neighbors(z) & s;
        if (hit != 0 && hit != s) return false;
    }
    return true;
}

VertexSet minimal_module(const Graph& g, VertexSet within, VertexSet seed) {
    VertexSet m = seed;
    for (;;) {
        VertexSet grown = m;
        for (int z : set_to_vector(within & ~m)) {
            VertexSet hit = g.neighbors(z) & m;
            if (hit != 0 && hit != m) grown |= bit(z);
        }
        if (grown == m) return m;
        m = grown;
    }
}

namespace {

// Maximal strong modules of g[within] when both g[within] and its complement
// are connected: the per-vertex unions of all proper modules (Gallai).
std::vector<VertexSet> prime_children(const Graph& g, VertexSet within) {
    std::vector<VertexSet> parts;
    VertexSet assigned = 0;
    for (int x : set_to_vector(within)) {
        if (assigned & bit(x)) continue;
        VertexSet mx = bit(x);
        for (int y : set_to_vector(within & ~bit(x))) {
            if (mx & bit(y)) continue;
            VertexSet m = minimal_module(g, within, bit(x) | bit(y));
            if (m != within) mx |= m;
        }
        if (mx & assigned) throw std::logic_error("prime module children overlap");
        parts.push_back(mx);
        assigned |= mx;
    }
    if (assigned != within) throw std::logic_error("prime module children do not cover");
    return parts;
}

void build_rec(const Graph& g, VertexSet module, int parent, ModularDecomposition& mdt) {
    int id = static_cast<int>(mdt.nodes.size());
    mdt.nodes.push_back({module, ModuleLabel::Leaf, parent, {}});
    if (parent >= 0) mdt.nodes[parent].children.push_back(id);

    if (popcount(module) == 1) return;

    std::vector<VertexSet> parts = components(g, module);
    ModuleLabel label = ModuleLabel::Parallel;
    if (parts.size() < 2) {
        parts = components(complement(g), module);
        label = ModuleLabel::Series;
    }
    if (parts.size() < 2) {
        parts = prime_children(g, module);
        label = ModuleLabel::Prime;
    }
    std::sort(parts.begin(), parts.end(),
              [](VertexSet a, VertexSet b) { return lowest(a) < lowest(b); });
    mdt.nodes[id].label = label;
    for (VertexSet part : parts) build_rec(g, part, id, mdt);
}

}  // namespace

ModularDecomposition build_mdt(const Graph& g) {
    ModularDecomposition mdt;
    build_rec(g, g.vertices(), -1, mdt);
    mdt.root = 0;
    return mdt;
}

std::vector<VertexSet> strong_modules(const Graph& g) {
    ModularDecomposition mdt = build_mdt(g);
    std::vector<VertexSet> out;
    out.reserve(mdt.nodes.size());
    for (const auto& node : mdt.nodes) out.push_back(node.module);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool is_primitive(const Graph& g) {
    int n = g.order();
    if (n < 4) return false;
    VertexSet all = g.vertices();
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (minimal_module(g, all, bit(x) | bit(y)) != all) return false;
    return true;
}

Graph quotient(const Graph& g, const std::vector<VertexSet>& parts) {
    VertexSet covered = 0;
    for (VertexSet part : parts) {
        if (part == 0) throw std::invalid_argument("quotient: empty part");
        if (covered & part) throw std::invalid_argument("quotient: parts overlap");
        if (!is_module(g, part)) throw std::invalid_argument("quotient: part is not a module");
        covered |= part;
    }
    if (covered != g.vertices()) throw std::invalid_argument("quotient: parts do not partition V");

    Graph q(static_cast<int>(parts.size()));
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            if (g.has_edge(lowest(parts[i]), lowest(parts[j])))
                q.add_edge(static_cast<int>(i), static_cast<int>(j));
    return q;
}

}  // namespace gatex
