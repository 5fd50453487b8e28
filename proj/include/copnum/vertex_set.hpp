#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace copnum {

/// Vertices are dense labels 0..n-1.
using Vertex = int;

/// Bitset over the vertex labels of one graph. One machine word covers
/// graphs up to 64 vertices; larger graphs use more words.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int capacity) : capacity_(capacity), words_(static_cast<std::size_t>((capacity + 63) / 64), 0) {}

    static VertexSet full(int capacity) {
        VertexSet s(capacity);
        for (Vertex v = 0; v < capacity; ++v) s.insert(v);
        return s;
    }

    int capacity() const { return capacity_; }

    bool contains(Vertex v) const {
        assert(v >= 0 && v < capacity_);
        return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1U;
    }
    void insert(Vertex v) {
        assert(v >= 0 && v < capacity_);
        words_[static_cast<std::size_t>(v) >> 6] |= bit(v);
    }
    void erase(Vertex v) {
        assert(v >= 0 && v < capacity_);
        words_[static_cast<std::size_t>(v) >> 6] &= ~bit(v);
    }

    int size() const {
        int total = 0;
        for (auto w : words_) total += std::popcount(w);
        return total;
    }
    bool empty() const {
        for (auto w : words_)
            if (w != 0) return false;
        return true;
    }

    bool is_subset_of(const VertexSet& other) const {
        assert(capacity_ == other.capacity_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }
    bool intersects(const VertexSet& other) const {
        assert(capacity_ == other.capacity_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }

    VertexSet& operator|=(const VertexSet& other) {
        assert(capacity_ == other.capacity_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& other) {
        assert(capacity_ == other.capacity_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
        return *this;
    }
    VertexSet& operator-=(const VertexSet& other) {
        assert(capacity_ == other.capacity_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    /// Visits members in ascending order.
    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                f(static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
                w &= w - 1;
            }
        }
    }

    std::vector<Vertex> to_vector() const {
        std::vector<Vertex> out;
        out.reserve(static_cast<std::size_t>(size()));
        for_each([&](Vertex v) { out.push_back(v); });
        return out;
    }

    /// Lowest member, or -1 when empty.
    Vertex first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i])));
        return -1;
    }

private:
    static std::uint64_t bit(Vertex v) { return std::uint64_t{1} << (v & 63); }

    int capacity_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace copnum
