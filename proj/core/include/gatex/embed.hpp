#pragma once

#include <optional>
#include <vector>

#include "gatex/graph.hpp"

namespace gatex {

/// Injective map realizing pattern as an induced subgraph of host, or
/// nullopt.  map[p] = host vertex for pattern vertex p; adjacency is
/// preserved both ways and re-checked before returning.
std::optional<std::vector<int>> find_induced_embedding(const Graph& host, const Graph& pattern);

bool has_induced(const Graph& host, const Graph& pattern);

}  // namespace gatex
