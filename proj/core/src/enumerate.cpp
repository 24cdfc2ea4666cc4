#include "gatex/enumerate.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "gatex/canonical.hpp"

namespace gatex {

const std::vector<Graph>& GraphEnumerator::graphs_of_order(int n) {
    if (n < 1 || n > 9) throw std::invalid_argument("enumeration supports 1 <= n <= 9");
    if (levels_.empty()) levels_.push_back({Graph(1)});
    while (static_cast<int>(levels_.size()) < n) {
        int k = static_cast<int>(levels_.size());  // parents have k vertices
        std::unordered_set<std::uint64_t> seen;
        std::vector<std::pair<std::uint64_t, Graph>> next;
        for (const Graph& parent : levels_.back()) {
            for (VertexSet attach = 0; attach < bit(k); ++attach) {
                Graph child(k + 1);
                for (auto [u, v] : parent.edges()) child.add_edge(u, v);
                for (int v : set_to_vector(attach)) child.add_edge(v, k);
                std::uint64_t key = canonical_key(child);
                if (seen.insert(key).second) next.emplace_back(key, std::move(child));
            }
        }
        std::sort(next.begin(), next.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<Graph> level;
        level.reserve(next.size());
        for (auto& [key, g] : next) level.push_back(std::move(g));
        if (static_cast<std::int64_t>(level.size()) != graph_class_counts[k])
            throw std::logic_error("enumeration count mismatch at n = " + std::to_string(k + 1));
        levels_.push_back(std::move(level));
    }
    return levels_[n - 1];
}

std::vector<Graph> enumerate_graphs(int n) {
    GraphEnumerator e;
    return e.graphs_of_order(n);
}

}  // namespace gatex
