#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "copnum/game.hpp"
#include "copnum/graph.hpp"
#include "copnum/positions.hpp"

namespace copnum {

/// The chain ⪯_0 ⊆ ⪯_1 ⊆ ... between robber vertices and k-cop positions,
/// stored as the least stage at which each pair enters.
///
/// x ⪯_0 p when a cop of p sits on x. x ⪯_i p when every neighbour y of x
/// has some q one cop-team step from p (each cop moves along an edge or
/// stays) with y ⪯_j q for some j < i. The robber may not pass.
class PreceqRelation {
public:
    int order() const { return n_; }
    int cops() const { return index_.cops(); }
    const PositionIndex& index() const { return index_; }
    /// Highest stage computed; the relation is ⪯_depth().
    int depth() const { return depth_; }
    /// True once the chain is known to have stabilised by depth().
    bool stable() const { return stable_; }

    bool contains(Vertex x, const CopPosition& p) const { return stage(x, p).has_value(); }
    std::optional<int> stage(Vertex x, const CopPosition& p) const;
    /// Pairs in ⪯_i for i <= depth().
    std::size_t pair_count(int i) const;
    std::size_t pair_count() const { return pair_count(depth_); }
    /// Sizes of ⪯_0, ..., ⪯_depth().
    std::vector<std::size_t> chain_sizes() const;
    /// Positions p with x ⪯ p for every vertex x.
    std::vector<CopPosition> universal_positions() const;

private:
    friend PreceqRelation preceq(const Graph&, int, std::optional<int>, const SolveLimits&);
    PreceqRelation(int n, int k) : n_(n), index_(n, k) {}
    static constexpr std::int16_t kAbsent = -1;
    int n_;
    PositionIndex index_;
    int depth_ = 0;
    bool stable_ = false;
    std::vector<std::int16_t> stage_;  // stage_[p * n + x]
};

/// ⪯_i for k cops on g; with no stage given, iterate until the chain
/// stabilises. Throws ResourceError when C(n+k-1,k)*n exceeds the budget.
PreceqRelation preceq(const Graph& g, int k, std::optional<int> i, const SolveLimits& limits = {});

/// Does some position p0 have x ⪯ p0 for every x once the chain is stable?
bool preceq_fixpoint_wins(const Graph& g, int k, const SolveLimits& limits = {});

}  // namespace copnum
