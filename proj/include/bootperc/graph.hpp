#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "bootperc/vertex_set.hpp"

namespace bootperc {

// Immutable simple undirected graph on vertices 0..n-1. Adjacency is stored
// both as per-vertex bitset rows (for word-parallel set statistics) and as
// sorted neighbour lists (for frontier iteration). Safe for concurrent reads.
class Graph {
public:
    Graph() = default;

    // Builds from an edge list; duplicate edges collapse, self-loops and
    // out-of-range endpoints are rejected.
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    const VertexSet& neighbours(int v) const { return rows_[static_cast<std::size_t>(v)]; }
    std::span<const int> neighbour_list(int v) const {
        return {lists_[static_cast<std::size_t>(v)].data(), lists_[static_cast<std::size_t>(v)].size()};
    }

    int degree(int v) const { return static_cast<int>(lists_[static_cast<std::size_t>(v)].size()); }

    bool adjacent(int u, int v) const { return rows_[static_cast<std::size_t>(u)].contains(v); }

    // Edges with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& other) const;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<VertexSet> rows_;
    std::vector<std::vector<int>> lists_;
};

int min_degree(const Graph& g);
int max_degree(const Graph& g);

// |N(x) ∩ a|
int degree_in(const Graph& g, int x, const VertexSet& a);

// Number of edges with exactly one endpoint in a.
long long cross_edge_count(const Graph& g, const VertexSet& a);

// Intersection of the neighbourhoods of all members of s; the empty
// intersection is the whole vertex set.
VertexSet common_neighbourhood(const Graph& g, const VertexSet& s);

bool induced_is_clique(const Graph& g, const VertexSet& a);

// Minimum of deg(u)+deg(v) over non-adjacent pairs; throws if none exist.
int sigma2(const Graph& g);

} // namespace bootperc
