#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace bootperc {

// Seed mixing and bounded sampling kept out of <random> distributions so that
// identical seeds give identical graphs on every platform.

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0,
                              std::uint64_t c = 0) {
    std::uint64_t h = splitmix64(seed ^ 0x2545f4914f6cdd1dull);
    h = splitmix64(h ^ splitmix64(a));
    h = splitmix64(h ^ splitmix64(b));
    h = splitmix64(h ^ splitmix64(c));
    return h;
}

// Uniform draw from [0, bound) by rejection.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound <= 1) return 0;
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

inline bool bernoulli(std::mt19937_64& rng, double p) {
    return (static_cast<double>(rng() >> 11) * 0x1.0p-53) < p;
}

// k distinct elements of {0..n-1}, ascending, by partial Fisher-Yates.
inline std::vector<int> sample_subset(std::mt19937_64& rng, int n, int k) {
    std::vector<int> pool(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i;
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        std::uint64_t j = i + uniform_below(rng, static_cast<std::uint64_t>(n - i));
        std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
        out.push_back(pool[static_cast<std::size_t>(i)]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace bootperc
