#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bootperc/graph.hpp"

namespace bootperc {

inline constexpr long long kDefaultBudget = 10'000'000;

// Budget is measured in closure evaluations, not wall time, so identical
// configs terminate identically on every machine.  Charging is wave-granular:
// a batch handed to the parallel evaluator is charged in full even when an
// early hit lets some workers stop, keeping the reported numbers independent
// of thread schedule.
struct Budget {
    long long limit = kDefaultBudget;
    long long used = 0;

    long long remaining() const { return limit > used ? limit - used : 0; }
    bool exhausted() const { return remaining() == 0; }
};

enum class search_status { found, none, budget_exhausted };
enum class solve_status { exact, upper_bound_only, budget_exhausted };

const char* to_string(search_status s);
const char* to_string(solve_status s);

struct ExistsResult {
    search_status status = search_status::none;
    std::optional<VertexSet> witness; // colex-first percolating k-subset
    long long subsets_examined = 0;   // enumerated candidates, pruned included
    long long closures_used = 0;
};

struct SolveResult {
    solve_status status = solve_status::exact;
    int value = 0; // m(G,r) when exact, else best known upper bound
    std::optional<VertexSet> witness;
    long long subsets_examined = 0;
    long long closures_used = 0;
    double elapsed_ms = 0.0;
};

struct RationalBound {
    std::string exact; // normalized fraction, "6" or "13/2"
    long long ceiling;
    double approx;
};

namespace detail {

// Closures of failed subsets, kept for the containment prune: any candidate
// S inside a closed non-full C closes into C itself, so it cannot percolate
// and is skipped without an evaluation.  Updated only between waves so the
// candidate stream never depends on worker schedule.
struct PruneCache {
    std::vector<VertexSet> closures; // largest first, deduped, capped
    std::vector<int> sizes;          // parallel member counts, descending

    void merge(std::vector<VertexSet>&& fresh);
    bool prunes(const int* ids, int k) const;
};

// Greedy bound that charges its closure evaluations to `budget` and gives up
// (nullopt) when the budget dies mid-build.
std::optional<std::pair<int, VertexSet>> budgeted_greedy(const Graph& g, int r, Budget& budget);

} // namespace detail

// Searches k-subsets in colexicographic order for one whose closure is the
// whole vertex set.  Witness is the first hit in enumeration order no matter
// how many workers share the wave.
ExistsResult exists_percolating_of_size(const Graph& g, int r, int k, Budget& budget);
ExistsResult exists_percolating_of_size(const Graph& g, int r, int k, Budget& budget,
                                        detail::PruneCache& cache);

// Exact m(G,r): greedy upper bound first, then level-by-level exhaustive
// search k = r, r+1, ... with the containment prune.  Status degrades to
// upper-bound-only (witness in hand, minimality unproven) or budget-exhausted
// (not even a greedy witness) when the budget dies first.
SolveResult min_percolating_set(const Graph& g, int r, Budget& budget);

// Exact rational value of sum_v min{1, r/(deg(v)+1)}, an upper bound for
// m(G,r), reported with its integer ceiling.
RationalBound reichman_bound(const Graph& g, int r);

// Percolating set built by repeatedly adding the vertex whose inclusion grows
// the closure most (ties to the lowest id).  The seed is accepted for
// interface stability but unused: tie-breaking is deterministic.
std::pair<int, VertexSet> greedy_upper_bound(const Graph& g, int r, std::uint64_t seed);

// First (S, T) with |S| = small, |T| = large, S disjoint from T and T inside
// the common neighbourhood of S; small side enumerated over vertices of
// degree >= large.
std::optional<std::pair<VertexSet, VertexSet>> find_complete_bipartite(const Graph& g,
                                                                       int small, int large);

} // namespace bootperc
