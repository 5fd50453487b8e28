#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "copnum/vertex_set.hpp"

namespace copnum {

/// Sorted k-tuple of cop locations; several cops may share a vertex.
class CopPosition {
public:
    CopPosition() = default;
    explicit CopPosition(std::vector<Vertex> cops);

    std::span<const Vertex> cops() const { return cops_; }
    int size() const { return static_cast<int>(cops_.size()); }
    bool occupies(Vertex v) const;

    friend bool operator==(const CopPosition&, const CopPosition&) = default;
    friend auto operator<=>(const CopPosition&, const CopPosition&) = default;

private:
    std::vector<Vertex> cops_;
};

/// Bijection between the C(n+k-1, k) cop positions on n vertices and
/// 0..count()-1, in lexicographic order of the sorted tuples.
class PositionIndex {
public:
    PositionIndex(int n, int k);

    int vertices() const { return n_; }
    int cops() const { return k_; }
    std::size_t count() const { return count_; }

    std::size_t rank(std::span<const Vertex> sorted_cops) const;
    std::size_t rank(const CopPosition& p) const { return rank(p.cops()); }

    /// Cop locations of position `id` (view into an internal table).
    std::span<const std::uint16_t> at(std::size_t id) const {
        return {table_.data() + id * static_cast<std::size_t>(k_), static_cast<std::size_t>(k_)};
    }
    CopPosition position(std::size_t id) const;

private:
    int n_;
    int k_;
    std::size_t count_;
    std::vector<std::vector<std::uint64_t>> multisets_;  // multisets_[k][n] = C(n+k-1, k)
    std::vector<std::uint16_t> table_;
};

}  // namespace copnum
