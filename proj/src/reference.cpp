#include "bootperc/reference.hpp"

#include <stdexcept>
#include <vector>

namespace bootperc {
namespace reference {

namespace {

// In-place colex successor of an ascending k-subset of {0..n-1}.
bool next_colex(std::vector<int>& c, int n) {
    const int k = static_cast<int>(c.size());
    for (int i = 0; i < k; ++i) {
        int limit = (i + 1 < k) ? c[static_cast<std::size_t>(i + 1)] : n;
        if (c[static_cast<std::size_t>(i)] + 1 < limit) {
            ++c[static_cast<std::size_t>(i)];
            for (int j = 0; j < i; ++j) c[static_cast<std::size_t>(j)] = j;
            return true;
        }
    }
    return false;
}

} // namespace

ClosureTrace closure(const Graph& g, const VertexSet& a, int r) {
    if (r < 1) throw std::invalid_argument("threshold r must be at least 1");
    ClosureTrace trace;
    trace.r = r;
    trace.initial = a;
    trace.final = a;
    for (;;) {
        VertexSet round(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (trace.final.contains(v)) continue;
            int infected_neighbours = 0;
            for (int u : g.neighbour_list(v))
                if (trace.final.contains(u)) ++infected_neighbours;
            if (infected_neighbours >= r) round.add(v);
        }
        if (round.empty()) break;
        trace.final |= round;
        trace.steps.push_back(std::move(round));
    }
    trace.time = static_cast<int>(trace.steps.size());
    return trace;
}

bool percolates(const Graph& g, const VertexSet& a, int r) {
    return reference::closure(g, a, r).final == VertexSet::full(g.vertex_count());
}

std::optional<VertexSet> find_percolating_of_size(const Graph& g, int r, int k) {
    const int n = g.vertex_count();
    if (k > n) return std::nullopt;
    std::vector<int> c(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i;
    do {
        VertexSet s = VertexSet::from_ids(n, c);
        if (reference::percolates(g, s, r)) return s;
    } while (next_colex(c, n));
    return std::nullopt;
}

std::pair<int, VertexSet> min_percolating_set(const Graph& g, int r) {
    for (int k = 0; k <= g.vertex_count(); ++k)
        if (auto s = find_percolating_of_size(g, r, k)) return {k, *s};
    throw std::logic_error("full vertex set must percolate");
}

} // namespace reference
} // namespace bootperc
