#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "gatex/graph.hpp"

namespace gatex {

/// Parse failure; offset is the byte position in the input record.
class Graph6Error : public std::runtime_error {
public:
    Graph6Error(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// graph6 text format: 6-bit chunks of the upper-triangle adjacency in
/// column order, offset 63.  Accepts an optional ">>graph6<<" header.
Graph graph6_decode(std::string_view text);
std::string graph6_encode(const Graph& g);

}  // namespace gatex
