#include "gatex/forbidden.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <stdexcept>
#include <thread>

#include "gatex/embed.hpp"
#include "gatex/enumerate.hpp"
#include "gatex/modular.hpp"
#include "gatex/recognize.hpp"

namespace gatex {

int ForbiddenCatalog::find(const Graph& g) const {
    if (g.order() > 10) return -1;
    std::uint64_t key = canonical_key(g);
    for (int id = 0; id < size(); ++id)
        if (members[id].canonical == key) return id;
    return -1;
}

namespace {

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
    unsigned threads = jobs > 0 ? static_cast<unsigned>(jobs)
                                : std::max(1u, std::thread::hardware_concurrency());
    if (threads <= 1 || count < 64) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                fn(i);
            }
        });
    for (auto& th : pool) th.join();
}

ForbiddenCatalog mine(const std::map<int, std::vector<Graph>>& by_order, int min_n, int max_n,
                      int jobs) {
    ForbiddenCatalog catalog;
    for (int k = min_n; k <= max_n; ++k) {
        const std::vector<Graph>& graphs = by_order.at(k);
        catalog.scanned += static_cast<std::int64_t>(graphs.size());
        catalog.scanned_per_order.emplace_back(k, static_cast<std::int64_t>(graphs.size()));
        std::vector<char> keep(graphs.size(), 0);
        // Same-size members cannot contain each other, so the filter is
        // parallel per order and only consults smaller members.
        parallel_for(graphs.size(), jobs, [&](std::size_t i) {
            const Graph& g = graphs[i];
            if (!is_primitive(g)) return;
            if (recognize_pseudo_cograph(g)) return;
            for (const auto& member : catalog.members)
                if (has_induced(g, member.graph)) return;
            keep[i] = 1;
        });
        for (std::size_t i = 0; i < graphs.size(); ++i)
            if (keep[i])
                catalog.members.push_back({graphs[i], canonical_key(graphs[i]), -1, false});
    }
    // Members arrive sorted by (order, canonical key) since each level is.
    for (int id = 0; id < catalog.size(); ++id) {
        std::uint64_t co_key = canonical_key(complement(catalog.members[id].graph));
        int partner = -1;
        for (int other = 0; other < catalog.size(); ++other)
            if (catalog.members[other].canonical == co_key) partner = other;
        if (partner < 0) throw std::logic_error("catalog is not complement-closed");
        catalog.members[id].complement_partner = partner;
        catalog.members[id].self_complementary = partner == id;
    }
    return catalog;
}

}  // namespace

ForbiddenCatalog mine_forbidden(int min_n, int max_n, int jobs) {
    if (min_n < 5 || min_n > max_n || max_n > 9)
        throw std::invalid_argument("mine_forbidden supports 5 <= min <= max <= 9");
    GraphEnumerator enumerator;
    std::map<int, std::vector<Graph>> by_order;
    for (int k = min_n; k <= max_n; ++k) by_order[k] = enumerator.graphs_of_order(k);
    ForbiddenCatalog catalog = mine(by_order, min_n, max_n, jobs);
    catalog.provenance = "mined";
    return catalog;
}

ForbiddenCatalog mine_forbidden_from(const std::vector<Graph>& corpus, int min_n, int max_n,
                                     int jobs) {
    if (min_n < 5 || min_n > max_n || max_n > 9)
        throw std::invalid_argument("mine_forbidden supports 5 <= min <= max <= 9");
    std::map<int, std::vector<Graph>> by_order;
    for (const Graph& g : corpus) {
        if (g.order() < min_n || g.order() > max_n)
            throw std::invalid_argument("corpus graph outside the mining range");
        by_order[g.order()].push_back(g);
    }
    for (int k = min_n; k <= max_n; ++k) {
        auto it = by_order.find(k);
        std::int64_t have = it == by_order.end() ? 0 : static_cast<std::int64_t>(it->second.size());
        if (have != graph_class_counts[k - 1])
            throw std::invalid_argument("corpus has " + std::to_string(have) + " graphs on " +
                                        std::to_string(k) + " vertices, expected " +
                                        std::to_string(graph_class_counts[k - 1]));
        // One representative per class; duplicates would silently pass the
        // count check otherwise.
        std::vector<std::uint64_t> keys;
        for (const Graph& g : it->second) keys.push_back(canonical_key(g));
        std::sort(keys.begin(), keys.end());
        if (std::adjacent_find(keys.begin(), keys.end()) != keys.end())
            throw std::invalid_argument("corpus contains isomorphic duplicates");
        std::sort(it->second.begin(), it->second.end(),
                  [](const Graph& a, const Graph& b) { return canonical_key(a) < canonical_key(b); });
    }
    ForbiddenCatalog catalog = mine(by_order, min_n, max_n, jobs);
    catalog.provenance = "loaded";
    return catalog;
}

const ForbiddenCatalog& default_catalog() {
    static const ForbiddenCatalog catalog = mine_forbidden(5, 8);
    return catalog;
}

}  // namespace gatex
