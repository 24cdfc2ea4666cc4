#include "gatex/json_io.hpp"

#include <sstream>

#include "gatex/graph6.hpp"

namespace gatex {

using nlohmann::json;

namespace {

const char* module_label_name(ModuleLabel l) {
    switch (l) {
        case ModuleLabel::Parallel: return "0";
        case ModuleLabel::Series: return "1";
        case ModuleLabel::Prime: return "prime";
        case ModuleLabel::Leaf: return "leaf";
    }
    return "?";
}

const char* node_kind(const GalledTree& n, int v) {
    if (n.is_leaf(v)) return "leaf";
    if (v == n.root) return "root";
    return n.is_hybrid(v) ? "hybrid" : "tree";
}

const char* node_label_name(NodeLabel l) {
    switch (l) {
        case NodeLabel::Zero: return "0";
        case NodeLabel::One: return "1";
        case NodeLabel::LeafMark: return "leaf";
    }
    return "?";
}

}  // namespace

json mdt_json(const ModularDecomposition& mdt) {
    json nodes = json::array();
    for (std::size_t id = 0; id < mdt.nodes.size(); ++id) {
        const auto& node = mdt.nodes[id];
        nodes.push_back({{"id", id},
                         {"label", module_label_name(node.label)},
                         {"module", set_to_vector(node.module)},
                         {"children", node.children}});
    }
    return {{"root", mdt.root}, {"nodes", nodes}};
}

std::string mdt_dot(const ModularDecomposition& mdt) {
    std::ostringstream out;
    out << "digraph mdt {\n";
    for (std::size_t id = 0; id < mdt.nodes.size(); ++id) {
        const auto& node = mdt.nodes[id];
        if (node.label == ModuleLabel::Leaf)
            out << "  n" << id << " [shape=plaintext, label=\"" << lowest(node.module) << "\"];\n";
        else
            out << "  n" << id << " [shape=circle, label=\"" << module_label_name(node.label)
                << "\"];\n";
        for (int c : node.children) out << "  n" << id << " -> n" << c << ";\n";
    }
    out << "}\n";
    return out.str();
}

json network_json(const LabeledNetwork& nt) {
    json nodes = json::array();
    json edges = json::array();
    for (int v = 0; v < nt.net.order(); ++v) {
        json node = {{"id", v},
                     {"kind", node_kind(nt.net, v)},
                     {"label", node_label_name(nt.labels[v])}};
        if (nt.net.is_leaf(v)) node["vertex"] = nt.net.nodes[v].leaf_vertex;
        nodes.push_back(std::move(node));
        for (int c : nt.net.nodes[v].children) edges.push_back({v, c});
    }
    return {{"root", nt.net.root}, {"nodes", nodes}, {"edges", edges}};
}

std::string network_dot(const LabeledNetwork& nt) {
    std::ostringstream out;
    out << "digraph network {\n";
    for (int v = 0; v < nt.net.order(); ++v) {
        if (nt.net.is_leaf(v)) {
            out << "  n" << v << " [shape=plaintext, label=\"" << nt.net.nodes[v].leaf_vertex
                << "\"];\n";
        } else {
            const char* shape = nt.net.is_hybrid(v) ? "doublecircle" : "circle";
            out << "  n" << v << " [shape=" << shape << ", label=\""
                << node_label_name(nt.labels[v]) << "\"];\n";
        }
        for (int c : nt.net.nodes[v].children) out << "  n" << v << " -> n" << c << ";\n";
    }
    out << "}\n";
    return out.str();
}

json verdict_json(const GatexVerdict& v) {
    json out = {{"accepted", v.accepted}};
    if (v.accepted) {
        out["witness_kind"] = "network";
        if (v.network) out["network"] = network_json(*v.network);
    } else if (v.embedding) {
        out["witness_kind"] = "embedding";
        out["embedding"] = {{"catalog_id", v.embedding->catalog_id}, {"map", v.embedding->map}};
    } else if (v.failing_module) {
        out["witness_kind"] = "failing_module";
        out["failing_module"] = set_to_vector(*v.failing_module);
    }
    return out;
}

json catalog_json(const ForbiddenCatalog& c) {
    json members = json::array();
    for (int id = 0; id < c.size(); ++id) {
        const auto& m = c.members[id];
        json edges = json::array();
        for (auto [u, v] : m.graph.edges()) edges.push_back({u, v});
        members.push_back({{"id", id},
                           {"n", m.graph.order()},
                           {"edges", edges},
                           {"graph6", graph6_encode(m.graph)},
                           {"complement_partner_id", m.complement_partner},
                           {"self_complementary", m.self_complementary}});
    }
    json scanned = json::array();
    for (auto [n, count] : c.scanned_per_order) scanned.push_back({{"n", n}, {"graphs", count}});
    return {{"provenance", c.provenance},
            {"scanned", c.scanned},
            {"scanned_per_order", scanned},
            {"members", members}};
}

json sequence_json(const ContractionSequence& s) {
    json steps = json::array();
    for (std::size_t i = 0; i < s.merges.size(); ++i)
        steps.push_back({{"step", i + 1}, {"merge", {s.merges[i].first, s.merges[i].second}}});
    return {{"width", s.width}, {"sequence", steps}};
}

ContractionSequence sequence_from_json(const json& j) {
    ContractionSequence s;
    s.width = j.value("width", 0);
    for (const auto& step : j.at("sequence"))
        s.merges.emplace_back(step.at("merge")[0].get<int>(), step.at("merge")[1].get<int>());
    return s;
}

json replay_json(const ReplayReport& r, int d) {
    json steps = json::array();
    for (const auto& step : r.steps)
        steps.push_back({{"step", step.step},
                         {"merge", {step.merge.first, step.merge.second}},
                         {"max_red_after", step.max_red_after}});
    json out = {{"ok", r.ok}, {"d", d}, {"max_red_seen", r.max_red_seen}, {"steps", steps}};
    if (!r.ok) out["violation"] = r.violation;
    return out;
}

}  // namespace gatex
