#pragma once

#include <cstdint>
#include <vector>

#include "gatex/graph.hpp"

namespace gatex {

/// Unlabeled graph counts for n = 1..9 (index 0 is n = 1).
inline constexpr std::int64_t graph_class_counts[9] = {1,       2,     4,      11,    34,
                                                       156,     1044,  12346,  274668};

/// Exhaustive per-isomorphism-class enumeration for n <= 9, built level by
/// level: every graph on n vertices arises from one on n-1 by attaching a
/// new vertex, deduplicated by canonical key.  Levels are cached.
class GraphEnumerator {
public:
    /// One representative per isomorphism class, sorted by canonical key.
    const std::vector<Graph>& graphs_of_order(int n);

private:
    std::vector<std::vector<Graph>> levels_;
};

std::vector<Graph> enumerate_graphs(int n);

}  // namespace gatex
