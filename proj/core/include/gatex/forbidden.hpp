#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gatex/canonical.hpp"
#include "gatex/graph.hpp"

namespace gatex {

/// The minimal forbidden induced subgraphs characterizing galled-tree
/// explainable graphs, regenerated from first principles.  Members are
/// sorted by (order, canonical form); ids are artifact-local.  Anchors:
/// id 0 is the unique self-complementary member (the 5-cycle).
struct ForbiddenCatalog {
    struct Member {
        Graph graph;
        std::uint64_t canonical = 0;
        int complement_partner = -1;
        bool self_complementary = false;
    };
    std::vector<Member> members;
    std::int64_t scanned = 0;
    std::vector<std::pair<int, std::int64_t>> scanned_per_order;
    std::string provenance;

    int size() const { return static_cast<int>(members.size()); }
    /// Index of the member isomorphic to g, or -1.
    int find(const Graph& g) const;
};

/// Keep every graph on min_n..max_n vertices that is primitive, not a
/// pseudo-cograph, and contains no previously kept smaller graph.
/// jobs = 0 picks the hardware concurrency.
ForbiddenCatalog mine_forbidden(int min_n, int max_n, int jobs = 0);

/// Same filter over an externally supplied corpus (e.g. graph6 lists); the
/// per-order class counts are verified against the built-in enumerator.
ForbiddenCatalog mine_forbidden_from(const std::vector<Graph>& corpus, int min_n, int max_n,
                                     int jobs = 0);

/// Catalog mined over 5..8, cached per process.
const ForbiddenCatalog& default_catalog();

}  // namespace gatex
