#include "bootperc/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "bootperc/closure.hpp"
#include "bootperc/edge_list.hpp"
#include "bootperc/rng.hpp"

namespace bootperc {

namespace {

constexpr long long kChunk = 1024;

bool next_colex(std::vector<int>& c, int n) {
    const int k = static_cast<int>(c.size());
    for (int i = 0; i < k; ++i) {
        int limit = (i + 1 < k) ? c[static_cast<std::size_t>(i + 1)] : n;
        if (c[static_cast<std::size_t>(i)] + 1 < limit) {
            ++c[static_cast<std::size_t>(i)];
            for (int j = 0; j < i; ++j) c[static_cast<std::size_t>(j)] = j;
            return true;
        }
    }
    return false;
}

// C(n,k) with saturation at cap+1, so "are there fewer subsets than samples"
// never overflows.
long long binom_capped(int n, int k, long long cap) {
    if (k < 0 || k > n) return 0;
    __int128 c = 1;
    for (int i = 1; i <= k; ++i) {
        c = c * (n - k + i) / i;
        if (c > cap) return cap + 1;
    }
    return static_cast<long long>(c);
}

// Closure sizes of the stride-k subsets in `flat`, evaluated in parallel
// chunks.  Returns the smallest index whose size fails `ok`, or `count` when
// every subset passes; the winner is the same no matter the worker schedule.
template <typename Ok>
long long first_size_violation(const Graph& g, int r, const std::vector<int>& flat, int k,
                               long long count, Ok&& ok) {
    const int n = g.vertex_count();
    const long long chunk_count = (count + kChunk - 1) / kChunk;
    std::atomic<long long> first_bad{count};
#pragma omp parallel for schedule(dynamic)
    for (long long ci = 0; ci < chunk_count; ++ci) {
        const long long begin = ci * kChunk;
        if (begin > first_bad.load(std::memory_order_relaxed)) continue;
        const long long end = std::min(count, begin + kChunk);
        ClosureWorkspace ws(g);
        VertexSet s(n), out(n);
        for (long long i = begin; i < end; ++i) {
            if ((i & 63) == 0 && first_bad.load(std::memory_order_relaxed) < i) break;
            s.clear();
            const int* ids = flat.data() + i * k;
            for (int j = 0; j < k; ++j) s.add(ids[j]);
            const int size = ws.run(s, r, out);
            if (!ok(size)) {
                long long cur = first_bad.load();
                while (i < cur && !first_bad.compare_exchange_weak(cur, i)) {}
                break;
            }
        }
    }
    return first_bad.load();
}

std::vector<int> subset_at(const std::vector<int>& flat, int k, long long i) {
    return {flat.begin() + i * k, flat.begin() + (i + 1) * k};
}

std::string join_params(const std::vector<std::pair<std::string, std::string>>& kv) {
    std::ostringstream os;
    for (std::size_t i = 0; i < kv.size(); ++i) {
        if (i) os << ' ';
        os << kv[i].first << '=' << kv[i].second;
    }
    return os.str();
}

} // namespace

long long gap_polynomial(int n, int r, int ell) {
    if (n < 1 || r < 3) throw std::invalid_argument("gap_polynomial: need n >= 1, r >= 3");
    const long long k = std::max(1, r - 3);
    const long long l = ell;
    return l * l - l * (n / 2 + k + r) + static_cast<long long>(r - 1) * n;
}

GapIntervals allowed_closed_sizes(int n, int r) {
    if (r < 3) throw std::invalid_argument("allowed_closed_sizes: need r >= 3");
    if (n < 10 * r)
        throw std::invalid_argument("allowed_closed_sizes: need n >= 10r (got n = " +
                                    std::to_string(n) + ", r = " + std::to_string(r) + ")");
    GapIntervals gi;
    gi.n = n;
    gi.r = r;
    gi.k = std::max(1, r - 3);
    gi.small_max = 2 * (r - 1);
    gi.large_min = n / 2 - std::min(1, r - 3);
    return gi;
}

Report check_closure_gap(const Graph& g, int r, long long sample_count, std::uint64_t seed) {
    const int n = g.vertex_count();
    const GapIntervals gi = allowed_closed_sizes(n, r); // validates n >= 10r, r >= 3
    if (sample_count < 1) throw std::invalid_argument("check_closure_gap: need samples >= 1");
    const int need = n / 2 + gi.k;
    if (min_degree(g) < need)
        throw std::invalid_argument("check_closure_gap: min degree " +
                                    std::to_string(min_degree(g)) + " below floor(n/2)+k = " +
                                    std::to_string(need));

    Report rep;
    rep.suite = "closure-gap";

    std::vector<int> flat;
    long long count = 0;
    const long long total = binom_capped(n, r, sample_count);
    if (total <= sample_count) {
        // fewer r-subsets than requested samples: check every one of them
        std::vector<int> combo(static_cast<std::size_t>(r));
        std::iota(combo.begin(), combo.end(), 0);
        do {
            flat.insert(flat.end(), combo.begin(), combo.end());
            ++count;
        } while (next_colex(combo, n));
        rep.notes = "exhaustive: all " + std::to_string(count) + " r-subsets";
    } else {
        std::mt19937_64 rng(mix_seed(seed, static_cast<std::uint64_t>(n),
                                     static_cast<std::uint64_t>(r)));
        for (long long i = 0; i < sample_count; ++i) {
            std::vector<int> pick = sample_subset(rng, n, r);
            flat.insert(flat.end(), pick.begin(), pick.end());
        }
        count = sample_count;
        rep.notes = "sampled " + std::to_string(count) + " r-subsets";
    }

    const int small_max = gi.small_max;
    const int large_min = gi.large_min;
    const long long bad = first_size_violation(
        g, r, flat, r, count, [&](int size) { return size <= small_max || size >= large_min; });

    rep.instances_checked = count;
    rep.closures_used = count;
    if (bad < count) {
        std::vector<int> ids = subset_at(flat, r, bad);
        const int size = closure_set(g, VertexSet::from_ids(n, ids), r).count();
        rep.passed = false;
        rep.counterexample = Counterexample{
            serialize_edge_list(g),
            join_params({{"check", "closure-gap"},
                         {"n", std::to_string(n)},
                         {"r", std::to_string(r)},
                         {"seed", std::to_string(seed)},
                         {"closure_size", std::to_string(size)},
                         {"small_max", std::to_string(small_max)},
                         {"large_min", std::to_string(large_min)}}),
            ids};
        rep.notes += "; closure size " + std::to_string(size) + " inside forbidden gap (" +
                     std::to_string(small_max) + ".." + std::to_string(large_min) + ")";
    }
    return rep;
}

Report check_big_sets_percolate(const Graph& g, int r, int k, long long sample_count,
                                std::uint64_t seed) {
    const int n = g.vertex_count();
    if (r < 3) throw std::invalid_argument("check_big_sets_percolate: need r >= 3");
    if (k < 1 || k > r - 1)
        throw std::invalid_argument("check_big_sets_percolate: need 1 <= k <= r-1");
    if (sample_count < 1)
        throw std::invalid_argument("check_big_sets_percolate: need samples >= 1");
    const int need = n / 2 + k;
    if (min_degree(g) < need)
        throw std::invalid_argument("check_big_sets_percolate: min degree " +
                                    std::to_string(min_degree(g)) + " below floor(n/2)+k = " +
                                    std::to_string(need));
    const int size = (n + 1) / 2 + (r - k - 1);
    if (size > n)
        throw std::invalid_argument("check_big_sets_percolate: target size exceeds n");

    Report rep;
    rep.suite = "big-sets-percolate";
    rep.notes = "sets of size " + std::to_string(size);

    std::vector<int> flat;
    std::mt19937_64 rng(mix_seed(seed, static_cast<std::uint64_t>(n),
                                 static_cast<std::uint64_t>(r), static_cast<std::uint64_t>(k)));
    for (long long i = 0; i < sample_count; ++i) {
        std::vector<int> pick = sample_subset(rng, n, size);
        flat.insert(flat.end(), pick.begin(), pick.end());
    }

    const long long bad =
        first_size_violation(g, r, flat, size, sample_count, [&](int s) { return s == n; });

    rep.instances_checked = sample_count;
    rep.closures_used = sample_count;
    if (bad < sample_count) {
        std::vector<int> ids = subset_at(flat, size, bad);
        rep.passed = false;
        rep.counterexample = Counterexample{
            serialize_edge_list(g),
            join_params({{"check", "big-sets-percolate"},
                         {"n", std::to_string(n)},
                         {"r", std::to_string(r)},
                         {"k", std::to_string(k)},
                         {"set_size", std::to_string(size)},
                         {"seed", std::to_string(seed)}}),
            ids};
        rep.notes += "; sampled set failed to percolate";
    }
    return rep;
}

Report check_all_r_sets_percolate(const Graph& g, int r, int k) {
    const int n = g.vertex_count();
    if (r < 1) throw std::invalid_argument("check_all_r_sets_percolate: need r >= 1");
    if (k < 1) throw std::invalid_argument("check_all_r_sets_percolate: need k >= 1");
    if (min_degree(g) < n - k)
        throw std::invalid_argument("check_all_r_sets_percolate: min degree " +
                                    std::to_string(min_degree(g)) + " below n-k = " +
                                    std::to_string(n - k));
    if (n < k * (r + 1) - 1)
        throw std::invalid_argument("check_all_r_sets_percolate: need n >= k(r+1)-1 = " +
                                    std::to_string(k * (r + 1) - 1));

    Report rep;
    rep.suite = "all-r-sets-percolate";

    std::vector<int> combo(static_cast<std::size_t>(r));
    std::iota(combo.begin(), combo.end(), 0);
    std::vector<int> flat;
    bool enum_done = false;
    while (!enum_done) {
        flat.clear();
        long long gen = 0;
        while (gen < 65536 && !enum_done) {
            flat.insert(flat.end(), combo.begin(), combo.end());
            ++gen;
            enum_done = !next_colex(combo, n);
        }
        const long long bad = first_size_violation(g, r, flat, r, gen,
                                                   [&](int s) { return s == n; });
        rep.closures_used += gen;
        if (bad < gen) {
            rep.instances_checked += bad + 1;
            std::vector<int> ids = subset_at(flat, r, bad);
            rep.passed = false;
            rep.counterexample = Counterexample{
                serialize_edge_list(g),
                join_params({{"check", "all-r-sets-percolate"},
                             {"n", std::to_string(n)},
                             {"r", std::to_string(r)},
                             {"k", std::to_string(k)}}),
                ids};
            rep.notes = "r-set failed to percolate";
            return rep;
        }
        rep.instances_checked += gen;
    }
    rep.notes = "all " + std::to_string(rep.instances_checked) + " r-subsets percolate";
    return rep;
}

Report check_closed_set_structure(const Graph& g, const VertexSet& a, int r) {
    const int n = g.vertex_count();
    if (r < 4) throw std::invalid_argument("check_closed_set_structure: need r >= 4");
    if (n < 2 * r) throw std::invalid_argument("check_closed_set_structure: need n >= 2r");
    if (min_degree(g) < n / 2 + 1)
        throw std::invalid_argument("check_closed_set_structure: min degree below floor(n/2)+1");
    const int want = (n + 1) / 2 + r - 3;
    if (a.count() != want)
        throw std::invalid_argument("check_closed_set_structure: set size " +
                                    std::to_string(a.count()) + ", need ceil(n/2)+r-3 = " +
                                    std::to_string(want));
    if (!is_closed(g, a, r))
        throw std::invalid_argument("check_closed_set_structure: set is not closed");

    Report rep;
    rep.suite = "closed-set-structure";
    rep.instances_checked = 1;

    const VertexSet outside = a.complement();
    const std::vector<int> out_ids = outside.members();
    auto fail = [&](std::vector<int> offending, const std::string& why) {
        rep.passed = false;
        rep.counterexample = Counterexample{
            serialize_edge_list(g),
            join_params({{"check", "closed-set-structure"},
                         {"n", std::to_string(n)},
                         {"r", std::to_string(r)},
                         {"set_size", std::to_string(want)}}),
            std::move(offending)};
        rep.notes = why;
    };

    for (std::size_t i = 0; i < out_ids.size(); ++i)
        for (std::size_t j = i + 1; j < out_ids.size(); ++j)
            if (!g.adjacent(out_ids[i], out_ids[j])) {
                fail({out_ids[i], out_ids[j]}, "complement misses an edge");
                return rep;
            }
    for (int v : out_ids) {
        const int d = degree_in(g, v, a);
        if (d != r - 1) {
            fail({v}, "outside vertex has " + std::to_string(d) + " neighbours in the set, want " +
                          std::to_string(r - 1));
            return rep;
        }
    }
    rep.notes = "complement induces a clique; every outside vertex has exactly " +
                std::to_string(r - 1) + " neighbours inside";
    return rep;
}

Report verify_construction_extremal(const ConstructionSpec& spec, Budget& budget) {
    const std::string& f = spec.family;
    if (f != "double-clique-matching" && f != "clique-pair-bipartite" && f != "odd-deletion")
        throw std::invalid_argument("verify_construction_extremal: unsupported family " + f);

    const Graph g = build_construction(spec);
    const int n = spec.n;
    const int r = spec.r > 0 ? spec.r : 3;

    int want_delta;
    if (f == "double-clique-matching")
        want_delta = n / 2;
    else
        want_delta = n / 2 + (r - 4); // floor(n/2) covers the odd-deletion case

    Report rep;
    rep.suite = "construction-extremal";
    const std::string params = join_params({{"family", f},
                                            {"n", std::to_string(n)},
                                            {"r", std::to_string(r)},
                                            {"strategy", strategy_name(spec.strategy)},
                                            {"seed", std::to_string(spec.seed)}});

    const int delta = min_degree(g);
    if (delta != want_delta) {
        rep.passed = false;
        rep.counterexample =
            Counterexample{serialize_edge_list(g),
                           params + " min_degree=" + std::to_string(delta) +
                               " expected=" + std::to_string(want_delta),
                           {}};
        rep.notes = "construction has wrong minimum degree";
        return rep;
    }

    ExistsResult e = exists_percolating_of_size(g, r, r, budget);
    rep.instances_checked = e.subsets_examined;
    rep.closures_used = e.closures_used;
    switch (e.status) {
        case search_status::found:
            rep.passed = false;
            rep.counterexample =
                Counterexample{serialize_edge_list(g), params, e.witness->members()};
            rep.notes = "an r-set percolates, so the family is not extremal at this size";
            break;
        case search_status::none:
            rep.notes = "min degree " + std::to_string(delta) + "; no percolating r-set among " +
                        std::to_string(e.subsets_examined) + " candidates";
            break;
        case search_status::budget_exhausted:
            rep.inconclusive = 1;
            rep.notes = "budget exhausted after " + std::to_string(e.closures_used) +
                        " closures; extremality not decided";
            break;
    }
    return rep;
}

Report verify_main_theorem_sweep(int r, std::pair<int, int> n_range, int trials,
                                 std::uint64_t seed, Budget& budget, double edge_prob,
                                 const std::function<void(const InstanceRow&)>& on_row) {
    if (r < 3) throw std::invalid_argument("verify_main_theorem_sweep: need r >= 3");
    if (n_range.first > n_range.second || n_range.first < 1)
        throw std::invalid_argument("verify_main_theorem_sweep: bad n range");
    if (trials < 1) throw std::invalid_argument("verify_main_theorem_sweep: need trials >= 1");

    const int bump = (r == 3) ? 1 : r - 3;
    Report rep;
    rep.suite = "main-theorem-sweep-r" + std::to_string(r);
    rep.notes = "threshold floor(n/2)+" + std::to_string(bump) + ", p=" +
                std::to_string(edge_prob);
    if (r == 3 && n_range.first < 30) rep.notes += "; includes n below 30";

    for (int n = n_range.first; n <= n_range.second; ++n) {
        const int delta = n / 2 + bump;
        if (delta >= n)
            throw std::invalid_argument("verify_main_theorem_sweep: threshold >= n at n = " +
                                        std::to_string(n));
        for (int trial = 0; trial < trials; ++trial) {
            const std::uint64_t iseed =
                mix_seed(seed, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(trial));
            const Graph g = random_min_degree_graph(n, delta, edge_prob, iseed);
            const std::string params = join_params({{"family", "random-min-degree"},
                                                    {"n", std::to_string(n)},
                                                    {"r", std::to_string(r)},
                                                    {"delta", std::to_string(delta)},
                                                    {"p", std::to_string(edge_prob)},
                                                    {"seed", std::to_string(iseed)},
                                                    {"trial", std::to_string(trial)}});

            InstanceRow row;
            row.suite = rep.suite;
            row.n = n;
            row.r = r;
            row.seed = iseed;
            const long long before = budget.used;
            ++rep.instances_checked;

            int witness_size = -1;
            bool decided = false;
            bool found = false;

            // mirrors the existence argument: a K_{r,r-1} whose large side
            // percolates settles the instance with one closure
            if (r >= 4 && !budget.exhausted()) {
                if (auto kb = find_complete_bipartite(g, r - 1, r)) {
                    ++budget.used;
                    if (percolates(g, kb->second, r)) {
                        decided = true;
                        found = true;
                        witness_size = kb->second.count();
                    }
                }
            }
            if (!decided && !budget.exhausted()) {
                if (auto greedy = detail::budgeted_greedy(g, r, budget)) {
                    if (greedy->first == r) {
                        decided = true;
                        found = true;
                        witness_size = r;
                    }
                } // a failed greedy only means the budget died; fall through
            }
            if (!decided) {
                ExistsResult e = exists_percolating_of_size(g, r, r, budget);
                if (e.status == search_status::found) {
                    decided = true;
                    found = true;
                    witness_size = r;
                } else if (e.status == search_status::none) {
                    decided = true;
                    found = false;
                }
            }
            row.closures_used = budget.used - before;
            rep.closures_used += row.closures_used;

            if (!decided) {
                row.outcome = "inconclusive";
                ++rep.inconclusive;
            } else if (found) {
                row.outcome = "pass";
                row.witness_size = witness_size;
            } else {
                row.outcome = "fail";
                if (rep.passed) {
                    rep.passed = false;
                    rep.counterexample = Counterexample{serialize_edge_list(g), params, {}};
                    rep.notes += "; no percolating r-set exists on a threshold instance";
                }
            }
            if (on_row) on_row(row);
            rep.rows.push_back(std::move(row));
        }
    }
    return rep;
}

} // namespace bootperc
