#pragma once

#include <vector>

#include "bootperc/graph.hpp"
#include "bootperc/vertex_set.hpp"

namespace bootperc {

// Record of one bootstrap run: steps[t] holds the vertices newly infected at
// time t+1, final is the fixed point, time = steps.size().
struct ClosureTrace {
    int r = 0;
    VertexSet initial;
    std::vector<VertexSet> steps;
    VertexSet final;
    int time = 0;
};

// One synchronous update: the vertices outside `infected` with at least r
// infected neighbours. Does not mutate inputs.
VertexSet step(const Graph& g, const VertexSet& infected, int r);

// Runs the process to its fixed point. Work is O(sum of degrees) over the
// whole run: per-vertex counters of infected neighbours plus a frontier of
// newly infected vertices, so repeated solver calls stay cheap.
ClosureTrace closure(const Graph& g, const VertexSet& a, int r);

// Fixed point only, skipping trace bookkeeping. Same engine as closure().
VertexSet closure_set(const Graph& g, const VertexSet& a, int r);

bool percolates(const Graph& g, const VertexSet& a, int r);
bool is_closed(const Graph& g, const VertexSet& a, int r);

// Reusable scratch buffers for closure_set when a caller runs many closures
// on the same graph. Not thread-shared; each worker owns one.
class ClosureWorkspace {
public:
    explicit ClosureWorkspace(const Graph& g);

    // Fixed-point membership written into `out`. Returns |out|.
    int run(const VertexSet& a, int r, VertexSet& out);

private:
    const Graph* g_;
    std::vector<int> count_;
    std::vector<int> frontier_;
    std::vector<int> next_;
    std::vector<int> touched_;
};

} // namespace bootperc
