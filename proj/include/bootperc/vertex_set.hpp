#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace bootperc {

inline constexpr int kMaxVertices = 4096;

// Subset of {0..n-1} stored as packed 64-bit words. Universe size is fixed at
// construction; all set operations require matching universes.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int universe) : n_(universe) {
        if (universe < 0 || universe > kMaxVertices)
            throw std::invalid_argument("VertexSet: universe size out of range");
        words_.assign(word_count(universe), 0);
    }

    VertexSet(int universe, std::initializer_list<int> ids) : VertexSet(universe) {
        for (int v : ids) add(v);
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (int w = 0; w < static_cast<int>(s.words_.size()); ++w)
            s.words_[w] = ~std::uint64_t{0};
        s.mask_tail();
        return s;
    }

    static VertexSet from_ids(int universe, const std::vector<int>& ids) {
        VertexSet s(universe);
        for (int v : ids) s.add(v);
        return s;
    }

    int universe() const { return n_; }

    bool contains(int v) const {
        check_vertex(v);
        return (words_[v >> 6] >> (v & 63)) & 1u;
    }

    void add(int v) {
        check_vertex(v);
        words_[v >> 6] |= std::uint64_t{1} << (v & 63);
    }

    void remove(int v) {
        check_vertex(v);
        words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    void clear() {
        for (std::uint64_t& w : words_) w = 0;
    }

    int count() const {
        int c = 0;
        for (std::uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (std::uint64_t w : words_) if (w) return false;
        return true;
    }

    bool is_subset_of(const VertexSet& other) const {
        check_same_universe(other);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }

    int intersection_count(const VertexSet& other) const {
        check_same_universe(other);
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += std::popcount(words_[i] & other.words_[i]);
        return c;
    }

    VertexSet& operator|=(const VertexSet& other) {
        check_same_universe(other);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
        return *this;
    }

    VertexSet& operator&=(const VertexSet& other) {
        check_same_universe(other);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
        return *this;
    }

    // Removes every member of `other` from this set.
    VertexSet& subtract(const VertexSet& other) {
        check_same_universe(other);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }

    VertexSet complement() const {
        VertexSet s(n_);
        for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] = ~words_[i];
        s.mask_tail();
        return s;
    }

    bool operator==(const VertexSet& other) const {
        return n_ == other.n_ && words_ == other.words_;
    }
    bool operator!=(const VertexSet& other) const { return !(*this == other); }

    // Visits members in increasing id order.
    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                int v = static_cast<int>(i << 6) + std::countr_zero(w);
                f(v);
                w &= w - 1;
            }
        }
    }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    std::uint64_t hash() const {
        std::uint64_t h = 1469598103934665603ull;
        for (std::uint64_t w : words_) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return h;
    }

    const std::uint64_t* words() const { return words_.data(); }
    int word_count() const { return static_cast<int>(words_.size()); }

    static int word_count(int universe) { return (universe + 63) >> 6; }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::out_of_range("VertexSet: vertex id " + std::to_string(v) +
                                    " outside universe of size " + std::to_string(n_));
    }
    void check_same_universe(const VertexSet& other) const {
        if (n_ != other.n_)
            throw std::invalid_argument("VertexSet: universe size mismatch");
    }
    void mask_tail() {
        if (n_ & 63) words_.back() &= (std::uint64_t{1} << (n_ & 63)) - 1;
    }

    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace bootperc
