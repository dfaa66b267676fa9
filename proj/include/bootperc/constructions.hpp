#pragma once

#include <cstdint>
#include <string>

#include "bootperc/graph.hpp"

namespace bootperc {

// Generators for the extremal families and for random test instances.
// All generators are pure functions of their parameters (seed included),
// so identical specs give identical graphs on every platform.

enum class gen_strategy {
    sidon,            // deterministic greedy shift set
    random_matchings, // union of seeded random perfect matchings
};

gen_strategy parse_strategy(const std::string& s);
std::string strategy_name(gen_strategy s);

struct ConstructionSpec {
    std::string family;  // double-clique-matching, clique-pair-bipartite, odd-deletion,
                         // grid, random-min-degree, sidon-bipartite
    int n = 0;           // vertex count (grid: side length)
    int r = 0;           // threshold parameter, where applicable
    int d = 0;           // grid dimension / bipartite regularity / min-degree target
    gen_strategy strategy = gen_strategy::sidon;
    std::uint64_t seed = 0;
    double edge_prob = 0.55; // random-min-degree only
};

// Two n/2-cliques A = {0..n/2-1}, B = {n/2..n-1} joined by the perfect
// matching i <-> i + n/2.  Every vertex has degree n/2.
Graph double_clique_matching(int n);

// d-regular bipartite graph on parts {0..half-1}, {half..2*half-1} with no
// four-cycle.  The sidon strategy connects a_i to b_{(i+s) mod half} for a
// greedily chosen shift set whose pairwise differences are distinct mod half;
// when no such set is found it falls back to unioning random perfect
// matchings, resampling any matching that creates a repeated edge or a C4
// (at most 10000 attempts, then an error reporting the attempt count).
// C4-freeness of the result is always verified, never assumed.
Graph sidon_bipartite(int half, int d, gen_strategy strategy = gen_strategy::sidon,
                      std::uint64_t seed = 0);

// Union of two n/2-cliques with an (r-3)-regular C4-free bipartite graph
// across them; regular of degree n/2 + r - 4.  Requires n even, n >= 2(r-1),
// r >= 4.
Graph clique_pair_bipartite(int n, int r, gen_strategy strategy = gen_strategy::sidon,
                            std::uint64_t seed = 0);

// clique_pair_bipartite(n+1, r, ...) with the highest-indexed vertex removed;
// min_degree = floor(n/2) + (r-4).  Requires n odd.
Graph odd_deletion(int n, int r, gen_strategy strategy = gen_strategy::sidon,
                   std::uint64_t seed = 0);

// Lattice graph on dim-tuples over {0..side-1}; tuples adjacent when they
// differ by exactly 1 in exactly one coordinate.  side >= 1, dim >= 1,
// side^dim within the vertex cap.
Graph grid(int side, int dim);

// Seeded binomial graph repaired upward: after sampling each pair with
// probability edge_prob, every vertex still below delta gains edges to
// uniformly chosen non-neighbours until it reaches delta.  Requires
// delta < n; always succeeds.
Graph random_min_degree_graph(int n, int delta, double edge_prob, std::uint64_t seed);

// Dispatch on spec.family; throws std::invalid_argument for unknown families
// or parameter violations.
Graph build_construction(const ConstructionSpec& spec);

} // namespace bootperc
