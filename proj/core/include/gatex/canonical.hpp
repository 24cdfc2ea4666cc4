#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "gatex/graph.hpp"

namespace gatex {

/// Canonical representative of an isomorphism class: the edge list of the
/// graph under its canonical vertex relabeling.
struct CanonicalForm {
    int order = 0;
    std::vector<std::pair<int, int>> edges;
    auto operator<=>(const CanonicalForm&) const = default;
};

/// Canonical relabeling by iterated degree/neighborhood refinement with
/// backtracking over cells.  perm[i] = original vertex placed at canonical
/// position i.  Supported for n <= 16.
std::vector<int> canonical_labeling(const Graph& g);

CanonicalForm canonical_form(const Graph& g);

/// Packed canonical adjacency (upper triangle, row-major) with the order in
/// the top bits; usable as a hash/dedup key for n <= 10.
std::uint64_t canonical_key(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

}  // namespace gatex
