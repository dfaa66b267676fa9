#include "bootperc/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bootperc/rng.hpp"

namespace bootperc {

namespace {

// In a simple bipartite graph a C4 is exactly a pair of left vertices with
// two common right neighbours.
bool bipartite_c4_free(const std::vector<VertexSet>& left_rows) {
    int half = static_cast<int>(left_rows.size());
    for (int i = 0; i < half; ++i)
        for (int j = i + 1; j < half; ++j)
            if (left_rows[i].intersection_count(left_rows[j]) >= 2) return false;
    return true;
}

// Greedy modular Sidon set: smallest valid next shift, all pairwise
// differences distinct mod `half`.  Returns empty when greedy gets stuck.
std::vector<int> greedy_sidon_shifts(int half, int d) {
    std::vector<int> shifts;
    std::vector<char> diff_used(static_cast<std::size_t>(half), 0);
    for (int t = 0; t < half && static_cast<int>(shifts.size()) < d; ++t) {
        bool ok = true;
        for (int s : shifts) {
            int d1 = (t - s + half) % half;
            int d2 = (s - t + half) % half;
            if (d1 == d2 || diff_used[static_cast<std::size_t>(d1)] ||
                diff_used[static_cast<std::size_t>(d2)]) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        for (int s : shifts) {
            diff_used[static_cast<std::size_t>((t - s + half) % half)] = 1;
            diff_used[static_cast<std::size_t>((s - t + half) % half)] = 1;
        }
        shifts.push_back(t);
    }
    if (static_cast<int>(shifts.size()) < d) return {};
    return shifts;
}

std::vector<std::pair<int, int>> sidon_cross_edges(int half, const std::vector<int>& shifts) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < half; ++i)
        for (int s : shifts) edges.emplace_back(i, half + (i + s) % half);
    return edges;
}

std::vector<std::pair<int, int>> random_matching_cross_edges(int half, int d,
                                                            std::uint64_t seed) {
    const int max_attempts = 10000;
    std::mt19937_64 rng(mix_seed(seed, static_cast<std::uint64_t>(half),
                                 static_cast<std::uint64_t>(d)));
    std::vector<VertexSet> rows(static_cast<std::size_t>(half), VertexSet(half));
    std::vector<int> perm(static_cast<std::size_t>(half));
    int attempts = 0;
    int built = 0;
    while (built < d) {
        if (attempts >= max_attempts)
            throw std::runtime_error("random-matchings strategy failed after " +
                                     std::to_string(attempts) + " attempts");
        ++attempts;
        std::iota(perm.begin(), perm.end(), 0);
        for (int i = half - 1; i > 0; --i) {
            int j = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(i + 1)));
            std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
        }
        bool repeat = false;
        for (int i = 0; i < half; ++i)
            if (rows[static_cast<std::size_t>(i)].contains(perm[static_cast<std::size_t>(i)])) {
                repeat = true;
                break;
            }
        if (repeat) continue;
        std::vector<VertexSet> trial = rows;
        for (int i = 0; i < half; ++i)
            trial[static_cast<std::size_t>(i)].add(perm[static_cast<std::size_t>(i)]);
        if (!bipartite_c4_free(trial)) continue;
        rows = std::move(trial);
        ++built;
    }
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < half; ++i)
        rows[static_cast<std::size_t>(i)].for_each([&](int j) { edges.emplace_back(i, half + j); });
    return edges;
}

} // namespace

gen_strategy parse_strategy(const std::string& s) {
    if (s == "sidon") return gen_strategy::sidon;
    if (s == "random-matchings") return gen_strategy::random_matchings;
    throw std::invalid_argument("unknown strategy: " + s);
}

std::string strategy_name(gen_strategy s) {
    return s == gen_strategy::sidon ? "sidon" : "random-matchings";
}

Graph double_clique_matching(int n) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("double_clique_matching: n must be even and >= 4");
    int half = n / 2;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < half; ++i)
        for (int j = i + 1; j < half; ++j) {
            edges.emplace_back(i, j);
            edges.emplace_back(half + i, half + j);
        }
    for (int i = 0; i < half; ++i) edges.emplace_back(i, half + i);
    return Graph(n, edges);
}

Graph sidon_bipartite(int half, int d, gen_strategy strategy, std::uint64_t seed) {
    if (d < 1 || d >= half)
        throw std::invalid_argument("sidon_bipartite: need 1 <= d < half");
    if (2 * half > kMaxVertices)
        throw std::invalid_argument("sidon_bipartite: vertex cap exceeded");

    std::vector<std::pair<int, int>> edges;
    if (strategy == gen_strategy::sidon) {
        std::vector<int> shifts = greedy_sidon_shifts(half, d);
        if (!shifts.empty())
            edges = sidon_cross_edges(half, shifts);
        else
            edges = random_matching_cross_edges(half, d, seed);
    } else {
        edges = random_matching_cross_edges(half, d, seed);
    }

    Graph g(2 * half, edges);
    // trust nothing: re-check regularity and C4-freeness of the output
    std::vector<VertexSet> left_rows;
    left_rows.reserve(static_cast<std::size_t>(half));
    for (int i = 0; i < half; ++i) {
        if (g.degree(i) != d || g.degree(half + i) != d)
            throw std::logic_error("sidon_bipartite: result not d-regular");
        VertexSet row(half);
        for (int b : g.neighbour_list(i)) row.add(b - half);
        left_rows.push_back(row);
    }
    if (!bipartite_c4_free(left_rows))
        throw std::logic_error("sidon_bipartite: result contains a C4");
    return g;
}

Graph clique_pair_bipartite(int n, int r, gen_strategy strategy, std::uint64_t seed) {
    if (r < 4) throw std::invalid_argument("clique_pair_bipartite: need r >= 4");
    if (n % 2 != 0 || n < 2 * (r - 1))
        throw std::invalid_argument("clique_pair_bipartite: need n even, n >= 2(r-1)");
    int half = n / 2;
    Graph h = sidon_bipartite(half, r - 3, strategy, seed);
    std::vector<std::pair<int, int>> edges = h.edges();
    for (int i = 0; i < half; ++i)
        for (int j = i + 1; j < half; ++j) {
            edges.emplace_back(i, j);
            edges.emplace_back(half + i, half + j);
        }
    return Graph(n, edges);
}

Graph odd_deletion(int n, int r, gen_strategy strategy, std::uint64_t seed) {
    if (n % 2 != 1) throw std::invalid_argument("odd_deletion: n must be odd");
    Graph g1 = clique_pair_bipartite(n + 1, r, strategy, seed);
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g1.edges())
        if (u != n && v != n) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph grid(int side, int dim) {
    if (side < 1 || dim < 1) throw std::invalid_argument("grid: need side >= 1, dim >= 1");
    long long total = 1;
    for (int k = 0; k < dim; ++k) {
        total *= side;
        if (total > kMaxVertices) throw std::invalid_argument("grid: vertex cap exceeded");
    }
    int n = static_cast<int>(total);
    std::vector<std::pair<int, int>> edges;
    for (int id = 0; id < n; ++id) {
        long long stride = 1;
        int rest = id;
        for (int k = 0; k < dim; ++k) {
            int coord = rest % side;
            rest /= side;
            if (coord + 1 < side)
                edges.emplace_back(id, id + static_cast<int>(stride));
            stride *= side;
        }
    }
    return Graph(n, edges);
}

Graph random_min_degree_graph(int n, int delta, double edge_prob, std::uint64_t seed) {
    if (n < 1 || delta < 0 || delta >= n)
        throw std::invalid_argument("random_min_degree_graph: need 0 <= delta < n");
    if (edge_prob < 0.0 || edge_prob > 1.0)
        throw std::invalid_argument("random_min_degree_graph: edge_prob outside [0,1]");
    std::mt19937_64 rng(mix_seed(seed, static_cast<std::uint64_t>(n),
                                 static_cast<std::uint64_t>(delta)));
    std::vector<VertexSet> rows(static_cast<std::size_t>(n), VertexSet(n));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (bernoulli(rng, edge_prob)) {
                rows[static_cast<std::size_t>(u)].add(v);
                rows[static_cast<std::size_t>(v)].add(u);
            }
    // repair pass: pull deficient vertices up to delta with uniform new edges
    for (int v = 0; v < n; ++v) {
        while (rows[static_cast<std::size_t>(v)].count() < delta) {
            VertexSet non = rows[static_cast<std::size_t>(v)].complement();
            non.remove(v);
            std::vector<int> candidates = non.members();
            int pick = candidates[static_cast<std::size_t>(
                uniform_below(rng, candidates.size()))];
            rows[static_cast<std::size_t>(v)].add(pick);
            rows[static_cast<std::size_t>(pick)].add(v);
        }
    }
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        rows[static_cast<std::size_t>(u)].for_each([&](int v) {
            if (u < v) edges.emplace_back(u, v);
        });
    return Graph(n, edges);
}

Graph build_construction(const ConstructionSpec& spec) {
    const std::string& f = spec.family;
    if (f == "double-clique-matching") return double_clique_matching(spec.n);
    if (f == "clique-pair-bipartite")
        return clique_pair_bipartite(spec.n, spec.r, spec.strategy, spec.seed);
    if (f == "odd-deletion") return odd_deletion(spec.n, spec.r, spec.strategy, spec.seed);
    if (f == "grid") return grid(spec.n, spec.d);
    if (f == "random-min-degree")
        return random_min_degree_graph(spec.n, spec.d, spec.edge_prob, spec.seed);
    if (f == "sidon-bipartite") {
        if (spec.n % 2 != 0)
            throw std::invalid_argument("sidon-bipartite: vertex count must be even");
        return sidon_bipartite(spec.n / 2, spec.d, spec.strategy, spec.seed);
    }
    throw std::invalid_argument("unknown family: " + f);
}

} // namespace bootperc
