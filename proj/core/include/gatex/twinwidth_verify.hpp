#pragma once

#include <string>
#include <vector>

#include "gatex/graph.hpp"
#include "gatex/twinwidth.hpp"

namespace gatex {

struct ReplayStep {
    int step = 0;
    std::pair<int, int> merge{-1, -1};
    int max_red_after = 0;
};

struct ReplayReport {
    bool ok = false;
    std::string violation;  // empty when ok
    std::vector<ReplayStep> steps;
    int max_red_seen = 0;
};

/// Independent referee: replays the sequence on the all-black trigraph of g
/// with its own bookkeeping (no code shared with the builder) and checks
/// that every intermediate red degree stays <= d and that the replay ends
/// in a single vertex.
ReplayReport verify_sequence(const Graph& g, const ContractionSequence& s, int d);

}  // namespace gatex
