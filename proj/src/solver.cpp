#include "bootperc/solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "bootperc/closure.hpp"

namespace bootperc {

namespace {

constexpr long long kChunk = 1024;
constexpr long long kWaveMax = 65536;
constexpr std::size_t kChunkKeepCap = 8;
constexpr std::size_t kCacheCap = 64;

// In-place colex successor of an ascending k-subset of {0..n-1}.
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

// Total order used everywhere cached closures are sorted, so the cache
// contents never depend on which worker produced what.
bool closure_order(const VertexSet& a, const VertexSet& b) {
    int ca = a.count(), cb = b.count();
    if (ca != cb) return ca > cb;
    return std::lexicographical_compare(a.words(), a.words() + a.word_count(),
                                        b.words(), b.words() + b.word_count());
}

void sort_dedupe_cap(std::vector<VertexSet>& v, std::size_t cap) {
    std::sort(v.begin(), v.end(), closure_order);
    v.erase(std::unique(v.begin(), v.end()), v.end());
    if (v.size() > cap) v.resize(cap);
}

std::optional<std::pair<int, VertexSet>> greedy_impl(const Graph& g, int r, Budget* budget,
                                                     long long& closures) {
    const int n = g.vertex_count();
    const VertexSet everyone = VertexSet::full(n);
    VertexSet chosen(n);
    VertexSet infected(n);
    VertexSet trial(n), out(n), best_out(n);
    ClosureWorkspace ws(g);
    while (infected != everyone) {
        int best_v = -1;
        int best_gain = -1;
        int base = infected.count();
        for (int v = 0; v < n; ++v) {
            if (infected.contains(v)) continue;
            if (budget && budget->exhausted()) return std::nullopt;
            trial = chosen;
            trial.add(v);
            ws.run(trial, r, out);
            if (budget) ++budget->used;
            ++closures;
            int gain = out.count() - base;
            if (gain > best_gain) { // strict: ties keep the lowest id
                best_gain = gain;
                best_v = v;
                best_out = out;
            }
        }
        chosen.add(best_v);
        infected = best_out;
    }
    return {{chosen.count(), chosen}};
}

} // namespace

const char* to_string(search_status s) {
    switch (s) {
        case search_status::found: return "found";
        case search_status::none: return "none";
        default: return "budget-exhausted";
    }
}

const char* to_string(solve_status s) {
    switch (s) {
        case solve_status::exact: return "exact";
        case solve_status::upper_bound_only: return "upper-bound-only";
        default: return "budget-exhausted";
    }
}

namespace detail {

void PruneCache::merge(std::vector<VertexSet>&& fresh) {
    if (fresh.empty()) return;
    for (VertexSet& c : closures) fresh.push_back(std::move(c));
    sort_dedupe_cap(fresh, kCacheCap);
    closures = std::move(fresh);
    sizes.resize(closures.size());
    for (std::size_t i = 0; i < closures.size(); ++i) sizes[i] = closures[i].count();
}

std::optional<std::pair<int, VertexSet>> budgeted_greedy(const Graph& g, int r,
                                                         Budget& budget) {
    long long closures = 0;
    return greedy_impl(g, r, &budget, closures);
}

bool PruneCache::prunes(const int* ids, int k) const {
    for (std::size_t ci = 0; ci < closures.size(); ++ci) {
        if (sizes[ci] < k) break; // sorted descending: nothing below fits a k-set
        const VertexSet& c = closures[ci];
        bool inside = true;
        for (int i = 0; i < k; ++i)
            if (!c.contains(ids[i])) {
                inside = false;
                break;
            }
        if (inside) return true;
    }
    return false;
}

} // namespace detail

ExistsResult exists_percolating_of_size(const Graph& g, int r, int k, Budget& budget) {
    detail::PruneCache cache;
    return exists_percolating_of_size(g, r, k, budget, cache);
}

ExistsResult exists_percolating_of_size(const Graph& g, int r, int k, Budget& budget,
                                        detail::PruneCache& cache) {
    if (r < 1) throw std::invalid_argument("threshold r must be at least 1");
    if (k < 0) throw std::invalid_argument("subset size must be nonnegative");
    const int n = g.vertex_count();
    ExistsResult res;
    if (k > n) {
        res.status = search_status::none;
        return res;
    }

    const VertexSet everyone = VertexSet::full(n);
    std::vector<int> combo(static_cast<std::size_t>(k));
    std::iota(combo.begin(), combo.end(), 0);
    bool enum_done = false;

    std::vector<int> wave; // flat candidate buffer, k ids each
    long long wave_target = 4096;

    while (!enum_done) {
        if (budget.exhausted()) {
            res.status = search_status::budget_exhausted;
            return res;
        }
        const long long cap = std::min(wave_target, budget.remaining());
        wave_target = std::min(kWaveMax, wave_target * 8);

        wave.clear();
        long long gen = 0;
        while (gen < cap && !enum_done) {
            ++res.subsets_examined;
            if (!cache.prunes(combo.data(), k)) {
                wave.insert(wave.end(), combo.begin(), combo.end());
                ++gen;
            }
            enum_done = !next_colex(combo, n);
        }
        if (gen == 0) continue;
        budget.used += gen;
        res.closures_used += gen;

        const long long chunk_count = (gen + kChunk - 1) / kChunk;
        std::atomic<long long> first_hit{gen};
        std::vector<std::vector<VertexSet>> chunk_keep(
            static_cast<std::size_t>(chunk_count));

#pragma omp parallel for schedule(dynamic)
        for (long long ci = 0; ci < chunk_count; ++ci) {
            const long long begin = ci * kChunk;
            if (begin > first_hit.load(std::memory_order_relaxed)) continue;
            const long long end = std::min(gen, begin + kChunk);
            ClosureWorkspace ws(g);
            VertexSet s(n), out(n);
            std::vector<VertexSet> keep;
            for (long long i = begin; i < end; ++i) {
                if ((i & 63) == 0 && first_hit.load(std::memory_order_relaxed) < i) break;
                s.clear();
                const int* ids = wave.data() + i * k;
                for (int j = 0; j < k; ++j) s.add(ids[j]);
                ws.run(s, r, out);
                if (out == everyone) {
                    long long cur = first_hit.load();
                    while (i < cur && !first_hit.compare_exchange_weak(cur, i)) {}
                    break;
                }
                if (out.count() > k) keep.push_back(out);
            }
            sort_dedupe_cap(keep, kChunkKeepCap);
            chunk_keep[static_cast<std::size_t>(ci)] = std::move(keep);
        }

        const long long hit = first_hit.load();
        if (hit < gen) {
            VertexSet w(n);
            const int* ids = wave.data() + hit * k;
            for (int j = 0; j < k; ++j) w.add(ids[j]);
            res.status = search_status::found;
            res.witness = std::move(w);
            return res;
        }
        std::vector<VertexSet> fresh;
        for (auto& part : chunk_keep)
            for (VertexSet& c : part) fresh.push_back(std::move(c));
        cache.merge(std::move(fresh));
    }
    res.status = search_status::none;
    return res;
}

SolveResult min_percolating_set(const Graph& g, int r, Budget& budget) {
    const auto t0 = std::chrono::steady_clock::now();
    if (r < 1) throw std::invalid_argument("threshold r must be at least 1");
    const int n = g.vertex_count();

    SolveResult res;
    auto finish = [&]() -> SolveResult& {
        res.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
        return res;
    };

    if (n == 0) {
        res.status = solve_status::exact;
        res.value = 0;
        res.witness = VertexSet(0);
        return finish();
    }
    if (max_degree(g) < r) {
        // no vertex can ever be newly infected, so only the full set percolates
        res.status = solve_status::exact;
        res.value = n;
        res.witness = VertexSet::full(n);
        return finish();
    }

    auto greedy = greedy_impl(g, r, &budget, res.closures_used);
    if (!greedy) {
        res.status = solve_status::budget_exhausted;
        res.value = n;
        res.witness = VertexSet::full(n);
        return finish();
    }
    const auto& [upper, upper_witness] = *greedy;

    // max_degree >= r forces n > r, so m >= r holds and k starts there
    if (upper == r) {
        res.status = solve_status::exact;
        res.value = r;
        res.witness = upper_witness;
        return finish();
    }

    detail::PruneCache cache;
    for (int k = r; k < upper; ++k) {
        ExistsResult e = exists_percolating_of_size(g, r, k, budget, cache);
        res.subsets_examined += e.subsets_examined;
        res.closures_used += e.closures_used;
        if (e.status == search_status::found) {
            res.status = solve_status::exact;
            res.value = k;
            res.witness = std::move(e.witness);
            return finish();
        }
        if (e.status == search_status::budget_exhausted) {
            res.status = solve_status::upper_bound_only;
            res.value = upper;
            res.witness = upper_witness;
            return finish();
        }
    }
    res.status = solve_status::exact;
    res.value = upper;
    res.witness = upper_witness;
    return finish();
}

RationalBound reichman_bound(const Graph& g, int r) {
    if (r < 1) throw std::invalid_argument("threshold r must be at least 1");
    using boost::multiprecision::cpp_int;
    using boost::multiprecision::cpp_rational;
    cpp_rational total = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        const int dplus1 = g.degree(v) + 1;
        if (r >= dplus1)
            total += 1;
        else
            total += cpp_rational(r, dplus1);
    }
    const cpp_int num = numerator(total);
    const cpp_int den = denominator(total);
    cpp_int ceil_q = num / den;
    if (num % den != 0) ++ceil_q;

    RationalBound b;
    b.exact = num.str();
    if (den != 1) b.exact += "/" + den.str();
    b.ceiling = ceil_q.convert_to<long long>();
    b.approx = total.convert_to<double>();
    return b;
}

std::pair<int, VertexSet> greedy_upper_bound(const Graph& g, int r, std::uint64_t seed) {
    (void)seed;
    if (r < 1) throw std::invalid_argument("threshold r must be at least 1");
    long long closures = 0;
    return *greedy_impl(g, r, nullptr, closures);
}

std::optional<std::pair<VertexSet, VertexSet>> find_complete_bipartite(const Graph& g,
                                                                       int small, int large) {
    if (small < 0 || small > large)
        throw std::invalid_argument("find_complete_bipartite: need 0 <= small <= large");
    const int n = g.vertex_count();

    std::vector<int> eligible;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) >= large) eligible.push_back(v);
    if (static_cast<int>(eligible.size()) < small) return std::nullopt;

    std::vector<int> idx(static_cast<std::size_t>(small));
    std::iota(idx.begin(), idx.end(), 0);
    do {
        VertexSet s(n);
        for (int i : idx) s.add(eligible[static_cast<std::size_t>(i)]);
        VertexSet cn = common_neighbourhood(g, s);
        cn.subtract(s);
        if (cn.count() >= large) {
            VertexSet t(n);
            int taken = 0;
            for (int v : cn.members()) {
                if (taken == large) break;
                t.add(v);
                ++taken;
            }
            return {{std::move(s), std::move(t)}};
        }
    } while (next_colex(idx, static_cast<int>(eligible.size())));
    return std::nullopt;
}

} // namespace bootperc
