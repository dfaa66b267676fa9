#pragma once

#include <optional>
#include <utility>

#include "bootperc/closure.hpp"
#include "bootperc/graph.hpp"

namespace bootperc {
namespace reference {

// Serial reference engine: every round rescans all n vertices against the
// update rule. Deliberately shares no code with the counter/frontier engine
// so the two can check each other.
ClosureTrace closure(const Graph& g, const VertexSet& a, int r);

bool percolates(const Graph& g, const VertexSet& a, int r);

// Unpruned exhaustive search: every subset of every size, in colexicographic
// order, smallest sizes first. Returns (minimum size, first witness found).
std::pair<int, VertexSet> min_percolating_set(const Graph& g, int r);

// First percolating k-subset in colexicographic order, if any.
std::optional<VertexSet> find_percolating_of_size(const Graph& g, int r, int k);

} // namespace reference
} // namespace bootperc
