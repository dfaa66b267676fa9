#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bootperc/constructions.hpp"
#include "bootperc/graph.hpp"
#include "bootperc/solver.hpp"

namespace bootperc {

// Everything needed to replay a failure: the exact graph, the parameters of
// the check, and the set that misbehaved.
struct Counterexample {
    std::string graph_edge_list;
    std::string parameters;
    std::vector<int> offending_set;
};

struct InstanceRow {
    std::string suite;
    int n = 0;
    int r = 0;
    std::uint64_t seed = 0;
    std::string outcome; // pass / fail / inconclusive
    int witness_size = -1;
    long long closures_used = 0;
};

// passed == false exactly when a counterexample is attached.  Instances the
// budget cut off are counted separately as inconclusive and never flip
// `passed` on their own.
struct Report {
    std::string suite;
    long long instances_checked = 0;
    bool passed = true;
    std::optional<Counterexample> counterexample;
    std::string notes;
    long long inconclusive = 0;
    long long closures_used = 0;
    std::vector<InstanceRow> rows; // per-instance detail for sweep-style suites
};

// The two admissible size ranges for closed sets when the minimum degree is
// at least floor(n/2) + k, k = max{1, r-3}: either at most small_max or at
// least large_min.
struct GapIntervals {
    int n = 0;
    int r = 0;
    int k = 0;
    int small_max = 0; // 2(r-1)
    int large_min = 0; // floor(n/2) - min{1, r-3}
};

// D(ell) = ell^2 - ell*(floor(n/2) + k + r) + (r-1)*n with k = max{1, r-3}.
// Nonnegative D at a closed-set size certifies membership in the admissible
// ranges; the negative stretch between them is exactly the forbidden gap.
long long gap_polynomial(int n, int r, int ell);

// Requires n >= 10r (the gap only opens for large enough n).
GapIntervals allowed_closed_sizes(int n, int r);

// Closures of sample_count seeded random r-subsets (or of every r-subset if
// there are fewer) must land in the admissible ranges or percolate.
// Requires min_degree >= floor(n/2) + max{1, r-3} and n >= 10r; violations
// of those hypotheses throw rather than fail the report.
Report check_closure_gap(const Graph& g, int r, long long sample_count, std::uint64_t seed);

// Samples sets of size exactly ceil(n/2) + (r-k-1); each must percolate.
// Requires min_degree >= floor(n/2) + k.
Report check_big_sets_percolate(const Graph& g, int r, int k, long long sample_count,
                                std::uint64_t seed);

// Exhaustive: every r-subset must percolate.  Requires min_degree >= n-k and
// n >= k(r+1) - 1.
Report check_all_r_sets_percolate(const Graph& g, int r, int k);

// For a closed set of size exactly ceil(n/2) + r - 3 under min_degree >=
// floor(n/2) + 1, n >= 2r, r >= 4: the complement must induce a clique and
// every complement vertex must have exactly r-1 neighbours inside the set.
Report check_closed_set_structure(const Graph& g, const VertexSet& a, int r);

// Builds the extremal family, asserts its exact minimum degree, then
// exhaustively confirms no r-subset percolates.  Budget exhaustion makes the
// report inconclusive, not failed.
Report verify_construction_extremal(const ConstructionSpec& spec, Budget& budget);

// Seeded random graphs at the degree threshold (floor(n/2)+1 for r = 3,
// floor(n/2)+(r-3) otherwise) for every n in the inclusive range and every
// trial; the solver must find a percolating r-set on each.  For r >= 4 a
// fast path tries the r-side of a K_{r,r-1}, then the greedy bound, before
// exhaustive search.  One row per instance, in instance order; on_row (when
// set) sees each row as its instance finishes, so long sweeps stream.
Report verify_main_theorem_sweep(int r, std::pair<int, int> n_range, int trials,
                                 std::uint64_t seed, Budget& budget,
                                 double edge_prob = 0.55,
                                 const std::function<void(const InstanceRow&)>& on_row = {});

} // namespace bootperc
