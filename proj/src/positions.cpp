#include "copnum/positions.hpp"

#include <algorithm>
#include <string>

#include "copnum/errors.hpp"
#include "copnum/numeric.hpp"

namespace copnum {

CopPosition::CopPosition(std::vector<Vertex> cops) : cops_(std::move(cops)) {
    std::sort(cops_.begin(), cops_.end());
}

bool CopPosition::occupies(Vertex v) const { return std::binary_search(cops_.begin(), cops_.end(), v); }

PositionIndex::PositionIndex(int n, int k) : n_(n), k_(k) {
    if (n < 1 || n > 65535) throw PreconditionError("position index needs 1..65535 vertices");
    if (k < 1) throw PreconditionError("position index needs at least one cop");
    std::uint64_t total = binomial(static_cast<std::uint64_t>(n + k - 1), static_cast<std::uint64_t>(k));
    if (total > (std::uint64_t{1} << 32)) throw ResourceError("too many cop positions: " + std::to_string(total), total);
    count_ = static_cast<std::size_t>(total);

    multisets_.assign(static_cast<std::size_t>(k + 1), std::vector<std::uint64_t>(static_cast<std::size_t>(n + 1), 0));
    multisets_[0].assign(static_cast<std::size_t>(n + 1), 1);
    for (int j = 1; j <= k; ++j)
        for (int m = 1; m <= n; ++m)
            multisets_[static_cast<std::size_t>(j)][static_cast<std::size_t>(m)] =
                multisets_[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(m)] +
                multisets_[static_cast<std::size_t>(j)][static_cast<std::size_t>(m - 1)];

    table_.resize(count_ * static_cast<std::size_t>(k));
    std::vector<std::uint16_t> cur(static_cast<std::size_t>(k), 0);
    for (std::size_t id = 0; id < count_; ++id) {
        std::copy(cur.begin(), cur.end(), table_.begin() + static_cast<std::ptrdiff_t>(id * static_cast<std::size_t>(k)));
        int p = k - 1;
        while (p >= 0 && cur[static_cast<std::size_t>(p)] == n - 1) --p;
        if (p < 0) break;
        ++cur[static_cast<std::size_t>(p)];
        for (int i = p + 1; i < k; ++i) cur[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(p)];
    }
}

std::size_t PositionIndex::rank(std::span<const Vertex> sorted_cops) const {
    // multisets below `sorted_cops` whose first differing entry is smaller,
    // counted entry by entry
    std::uint64_t result = 0;
    int low = 0;
    int remaining = k_;
    for (Vertex x : sorted_cops) {
        result += multisets_[static_cast<std::size_t>(remaining)][static_cast<std::size_t>(n_ - low)] -
                  multisets_[static_cast<std::size_t>(remaining)][static_cast<std::size_t>(n_ - x)];
        low = x;
        --remaining;
    }
    return static_cast<std::size_t>(result);
}

CopPosition PositionIndex::position(std::size_t id) const {
    auto cops = at(id);
    return CopPosition(std::vector<Vertex>(cops.begin(), cops.end()));
}

}  // namespace copnum
