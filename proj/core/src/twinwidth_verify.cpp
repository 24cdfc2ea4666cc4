#include "gatex/twinwidth_verify.hpp"

#include <algorithm>

namespace gatex {

// Deliberately self-contained: plain adjacency matrix over {none, black,
// red}, so the referee shares no contraction bookkeeping with the builder.
ReplayReport verify_sequence(const Graph& g, const ContractionSequence& s, int d) {
    enum : char { none = 0, black = 1, red = 2 };
    int n = g.order();
    ReplayReport report;
    std::vector<std::vector<char>> m(n, std::vector<char>(n, none));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && g.has_edge(u, v)) m[u][v] = black;
    std::vector<char> alive(n, 1);

    auto fail = [&](std::string why) {
        report.ok = false;
        report.violation = std::move(why);
        return report;
    };

    if (static_cast<int>(s.merges.size()) != n - 1)
        return fail("sequence must have exactly n - 1 merges, got " +
                    std::to_string(s.merges.size()));

    int step_no = 0;
    for (auto [u, v] : s.merges) {
        ++step_no;
        if (u < 0 || u >= n || v < 0 || v >= n)
            return fail("step " + std::to_string(step_no) + " names an unknown vertex");
        if (u == v) return fail("step " + std::to_string(step_no) + " merges a vertex with itself");
        if (!alive[u] || !alive[v])
            return fail("step " + std::to_string(step_no) + " references a dead vertex");
        int keep = std::min(u, v), gone = std::max(u, v);
        for (int x = 0; x < n; ++x) {
            if (!alive[x] || x == keep || x == gone) continue;
            char merged;
            if (m[u][x] == black && m[v][x] == black)
                merged = black;
            else if (m[u][x] == none && m[v][x] == none)
                merged = none;
            else
                merged = red;
            m[keep][x] = m[x][keep] = merged;
        }
        alive[gone] = 0;
        for (int x = 0; x < n; ++x) m[gone][x] = m[x][gone] = none;

        int max_red = 0;
        for (int x = 0; x < n; ++x) {
            if (!alive[x]) continue;
            int deg = 0;
            for (int y = 0; y < n; ++y) deg += m[x][y] == red;
            max_red = std::max(max_red, deg);
        }
        report.steps.push_back({step_no, {u, v}, max_red});
        report.max_red_seen = std::max(report.max_red_seen, max_red);
        if (max_red > d)
            return fail("step " + std::to_string(step_no) + " reaches red degree " +
                        std::to_string(max_red) + " > " + std::to_string(d));
    }
    if (std::count(alive.begin(), alive.end(), char{1}) != 1)
        return fail("replay did not end in a single vertex");
    report.ok = true;
    return report;
}

}  // namespace gatex
