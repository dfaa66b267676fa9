#include "bootperc/closure.hpp"

#include <stdexcept>

namespace bootperc {

namespace {

void check_threshold(int r) {
    if (r < 1) throw std::invalid_argument("threshold r must be at least 1");
}

} // namespace

VertexSet step(const Graph& g, const VertexSet& infected, int r) {
    check_threshold(r);
    VertexSet next(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (infected.contains(v)) continue;
        if (g.neighbours(v).intersection_count(infected) >= r) next.add(v);
    }
    return next;
}

ClosureTrace closure(const Graph& g, const VertexSet& a, int r) {
    check_threshold(r);
    const int n = g.vertex_count();

    ClosureTrace trace;
    trace.r = r;
    trace.initial = a;
    trace.final = a;

    std::vector<int> count(static_cast<std::size_t>(n), 0);
    std::vector<int> frontier = a.members();
    std::vector<int> next;

    while (!frontier.empty()) {
        next.clear();
        for (int u : frontier) {
            for (int v : g.neighbour_list(u)) {
                if (trace.final.contains(v)) continue;
                // counters only grow, so each vertex crosses r exactly once
                if (++count[static_cast<std::size_t>(v)] == r) next.push_back(v);
            }
        }
        if (next.empty()) break;
        VertexSet round(n);
        for (int v : next) round.add(v);
        trace.final |= round;
        trace.steps.push_back(std::move(round));
        frontier = next;
    }
    trace.time = static_cast<int>(trace.steps.size());
    return trace;
}

VertexSet closure_set(const Graph& g, const VertexSet& a, int r) {
    check_threshold(r);
    ClosureWorkspace ws(g);
    VertexSet out(g.vertex_count());
    ws.run(a, r, out);
    return out;
}

bool percolates(const Graph& g, const VertexSet& a, int r) {
    return closure_set(g, a, r) == VertexSet::full(g.vertex_count());
}

bool is_closed(const Graph& g, const VertexSet& a, int r) {
    return step(g, a, r).empty();
}

ClosureWorkspace::ClosureWorkspace(const Graph& g) : g_(&g) {
    count_.assign(static_cast<std::size_t>(g.vertex_count()), 0);
    frontier_.reserve(static_cast<std::size_t>(g.vertex_count()));
    next_.reserve(static_cast<std::size_t>(g.vertex_count()));
    touched_.reserve(static_cast<std::size_t>(g.vertex_count()));
}

int ClosureWorkspace::run(const VertexSet& a, int r, VertexSet& out) {
    check_threshold(r);
    out = a;
    int size = a.count();

    touched_.clear();
    frontier_.clear();
    a.for_each([&](int v) { frontier_.push_back(v); });

    while (!frontier_.empty()) {
        next_.clear();
        for (int u : frontier_) {
            for (int v : g_->neighbour_list(u)) {
                if (out.contains(v)) continue;
                int c = ++count_[static_cast<std::size_t>(v)];
                if (c == 1) touched_.push_back(v);
                if (c == r) next_.push_back(v);
            }
        }
        for (int v : next_) out.add(v);
        size += static_cast<int>(next_.size());
        std::swap(frontier_, next_);
    }

    for (int v : touched_) count_[static_cast<std::size_t>(v)] = 0;
    return size;
}

} // namespace bootperc
