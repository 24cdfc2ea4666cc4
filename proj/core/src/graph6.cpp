#include "gatex/graph6.hpp"

namespace gatex {

namespace {
constexpr std::string_view header = ">>graph6<<";
constexpr int lo = 63, hi = 126;
}  // namespace

Graph graph6_decode(std::string_view text) {
    std::size_t pos = 0;
    if (text.substr(0, header.size()) == header) pos = header.size();
    if (pos >= text.size()) throw Graph6Error("empty graph6 record", pos);

    long long n = 0;
    unsigned char c = static_cast<unsigned char>(text[pos]);
    if (c == 126) {
        // Multi-byte order; parse so oversized records fail with a size
        // error rather than a garbled one.
        ++pos;
        int bytes = 3;
        if (pos < text.size() && static_cast<unsigned char>(text[pos]) == 126) {
            ++pos;
            bytes = 6;
        }
        for (int i = 0; i < bytes; ++i, ++pos) {
            if (pos >= text.size()) throw Graph6Error("truncated vertex count", pos);
            unsigned char b = static_cast<unsigned char>(text[pos]);
            if (b < lo || b > hi) throw Graph6Error("vertex count byte out of range", pos);
            n = (n << 6) | (b - lo);
        }
    } else {
        if (c < lo || c > hi) throw Graph6Error("vertex count byte out of range", pos);
        n = c - lo;
        ++pos;
    }
    if (n < 1) throw Graph6Error("graphs must have at least one vertex", 0);
    if (n > Graph::max_vertices)
        throw Graph6Error("unsupported graph order " + std::to_string(n), 0);

    Graph g(static_cast<int>(n));
    int bits_left = 0;
    int chunk = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            if (bits_left == 0) {
                if (pos >= text.size()) throw Graph6Error("truncated adjacency data", pos);
                unsigned char b = static_cast<unsigned char>(text[pos]);
                if (b < lo || b > hi) throw Graph6Error("adjacency byte out of range", pos);
                chunk = b - lo;
                bits_left = 6;
                ++pos;
            }
            --bits_left;
            if ((chunk >> bits_left) & 1) g.add_edge(row, col);
        }
    }
    if ((chunk & ((1 << bits_left) - 1)) != 0)
        throw Graph6Error("nonzero padding bits", pos - 1);
    if (pos != text.size()) throw Graph6Error("trailing garbage after record", pos);
    return g;
}

std::string graph6_encode(const Graph& g) {
    int n = g.order();
    if (n > 62) throw std::invalid_argument("graph6_encode supports at most 62 vertices");
    std::string out;
    out.push_back(static_cast<char>(n + lo));
    int bits = 0;
    int chunk = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            chunk = (chunk << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(chunk + lo));
                bits = 0;
                chunk = 0;
            }
        }
    }
    if (bits > 0) out.push_back(static_cast<char>((chunk << (6 - bits)) + lo));
    return out;
}

}  // namespace gatex
