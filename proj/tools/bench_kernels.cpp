// microbenchmarks: the frontier-based closure kernel against the naive
// rescan reference, and the parallel subset search against the serial one.
#include <benchmark/benchmark.h>

#include "bootperc/closure.hpp"
#include "bootperc/constructions.hpp"
#include "bootperc/reference.hpp"
#include "bootperc/rng.hpp"
#include "bootperc/solver.hpp"

using namespace bootperc;

namespace {

// dense random graph above the percolation threshold, so a small seed set
// triggers a cascade that sweeps the whole vertex set
Graph cascade_graph(int n) {
    return random_min_degree_graph(n, n / 2 + 1, 0.55, 42);
}

VertexSet cascade_seed(const Graph& g) {
    std::mt19937_64 rng(mix_seed(7, static_cast<std::uint64_t>(g.vertex_count())));
    return VertexSet::from_ids(g.vertex_count(), sample_subset(rng, g.vertex_count(), 3));
}

void BM_closure_optimized(benchmark::State& state) {
    const Graph g = cascade_graph(static_cast<int>(state.range(0)));
    const VertexSet a = cascade_seed(g);
    ClosureWorkspace ws(g);
    VertexSet out(g.vertex_count());
    for (auto _ : state) {
        int sz = ws.run(a, 3, out);
        benchmark::DoNotOptimize(sz);
    }
}

void BM_closure_naive(benchmark::State& state) {
    const Graph g = cascade_graph(static_cast<int>(state.range(0)));
    const VertexSet a = cascade_seed(g);
    for (auto _ : state) {
        ClosureTrace t = reference::closure(g, a, 3);
        benchmark::DoNotOptimize(t.final);
    }
}

// exhaustive r-set search on a family with no percolating r-set: the search
// must visit every subset, which is the worst case for both engines
void BM_search_parallel(benchmark::State& state) {
    const Graph g = clique_pair_bipartite(static_cast<int>(state.range(0)), 4);
    for (auto _ : state) {
        Budget b{.limit = kDefaultBudget};
        ExistsResult res = exists_percolating_of_size(g, 4, 4, b);
        benchmark::DoNotOptimize(res.status);
    }
}

void BM_search_serial(benchmark::State& state) {
    const Graph g = clique_pair_bipartite(static_cast<int>(state.range(0)), 4);
    for (auto _ : state) {
        auto w = reference::find_percolating_of_size(g, 4, 4);
        benchmark::DoNotOptimize(w.has_value());
    }
}

} // namespace

BENCHMARK(BM_closure_optimized)->Arg(64)->Arg(256)->Arg(1024);
BENCHMARK(BM_closure_naive)->Arg(64)->Arg(256)->Arg(1024);
BENCHMARK(BM_search_parallel)->Arg(16)->Arg(20);
BENCHMARK(BM_search_serial)->Arg(16)->Arg(20);

BENCHMARK_MAIN();
