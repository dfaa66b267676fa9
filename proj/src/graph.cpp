#include "bootperc/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace bootperc {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("Graph: vertex count " + std::to_string(n) +
                                    " outside [0, " + std::to_string(kMaxVertices) + "]");
    rows_.assign(static_cast<std::size_t>(n), VertexSet(n));
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("Graph: edge endpoint out of range");
        if (u == v)
            throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(u));
        rows_[static_cast<std::size_t>(u)].add(v);
        rows_[static_cast<std::size_t>(v)].add(u);
    }
    lists_.resize(static_cast<std::size_t>(n));
    m_ = 0;
    for (int v = 0; v < n; ++v) {
        lists_[static_cast<std::size_t>(v)] = rows_[static_cast<std::size_t>(v)].members();
        m_ += static_cast<int>(lists_[static_cast<std::size_t>(v)].size());
    }
    m_ /= 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v : lists_[static_cast<std::size_t>(u)])
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool Graph::operator==(const Graph& other) const {
    return n_ == other.n_ && rows_ == other.rows_;
}

int min_degree(const Graph& g) {
    if (g.vertex_count() == 0)
        throw std::invalid_argument("min_degree: empty graph");
    int best = g.degree(0);
    for (int v = 1; v < g.vertex_count(); ++v) best = std::min(best, g.degree(v));
    return best;
}

int max_degree(const Graph& g) {
    int best = 0;
    for (int v = 0; v < g.vertex_count(); ++v) best = std::max(best, g.degree(v));
    return best;
}

int degree_in(const Graph& g, int x, const VertexSet& a) {
    if (x < 0 || x >= g.vertex_count())
        throw std::out_of_range("degree_in: vertex out of range");
    return g.neighbours(x).intersection_count(a);
}

long long cross_edge_count(const Graph& g, const VertexSet& a) {
    VertexSet outside = a.complement();
    long long total = 0;
    a.for_each([&](int v) { total += g.neighbours(v).intersection_count(outside); });
    return total;
}

VertexSet common_neighbourhood(const Graph& g, const VertexSet& s) {
    VertexSet result = VertexSet::full(g.vertex_count());
    s.for_each([&](int v) { result &= g.neighbours(v); });
    return result;
}

bool induced_is_clique(const Graph& g, const VertexSet& a) {
    int size = a.count();
    if (size <= 1) return true;
    bool ok = true;
    a.for_each([&](int v) {
        if (g.neighbours(v).intersection_count(a) != size - 1) ok = false;
    });
    return ok;
}

int sigma2(const Graph& g) {
    int n = g.vertex_count();
    int best = -1;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) {
                int s = g.degree(u) + g.degree(v);
                if (best < 0 || s < best) best = s;
            }
    if (best < 0)
        throw std::invalid_argument("sigma2: graph has no non-adjacent pair");
    return best;
}

} // namespace bootperc
