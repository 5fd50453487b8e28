#include "copnum/preceq.hpp"

#include <algorithm>
#include <string>

#include "copnum/errors.hpp"
#include "copnum/numeric.hpp"

namespace copnum {

namespace {

// All sorted positions reachable from `from` in one team step, as ranks.
void team_steps(const Graph& g, const PositionIndex& index, std::span<const std::uint16_t> from,
                std::vector<std::size_t>& out) {
    const int k = index.cops();
    std::vector<Vertex> tuple(static_cast<std::size_t>(k));
    std::vector<Vertex> sorted(static_cast<std::size_t>(k));
    out.clear();
    auto rec = [&](auto&& self, int i) -> void {
        if (i == k) {
            sorted = tuple;
            std::sort(sorted.begin(), sorted.end());
            out.push_back(index.rank(sorted));
            return;
        }
        const Vertex c = from[static_cast<std::size_t>(i)];
        tuple[static_cast<std::size_t>(i)] = c;
        self(self, i + 1);
        for (Vertex w : g.neighbors(c)) {
            tuple[static_cast<std::size_t>(i)] = w;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
}

}  // namespace

std::optional<int> PreceqRelation::stage(Vertex x, const CopPosition& p) const {
    if (x < 0 || x >= n_ || p.size() != cops())
        throw PreconditionError("pair outside the relation's domain");
    for (Vertex c : p.cops())
        if (c < 0 || c >= n_) throw PreconditionError("cop position outside the graph");
    auto s = stage_[index_.rank(p) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(x)];
    if (s == kAbsent) return std::nullopt;
    return s;
}

std::size_t PreceqRelation::pair_count(int i) const {
    return static_cast<std::size_t>(
        std::count_if(stage_.begin(), stage_.end(), [i](std::int16_t s) { return s != kAbsent && s <= i; }));
}

std::vector<std::size_t> PreceqRelation::chain_sizes() const {
    std::vector<std::size_t> sizes(static_cast<std::size_t>(depth_) + 1, 0);
    for (auto s : stage_)
        if (s != kAbsent)
            for (int i = s; i <= depth_; ++i) ++sizes[static_cast<std::size_t>(i)];
    return sizes;
}

std::vector<CopPosition> PreceqRelation::universal_positions() const {
    std::vector<CopPosition> out;
    const auto n = static_cast<std::size_t>(n_);
    for (std::size_t p = 0; p < index_.count(); ++p) {
        auto row = stage_.begin() + static_cast<std::ptrdiff_t>(p * n);
        if (std::none_of(row, row + static_cast<std::ptrdiff_t>(n), [](std::int16_t s) { return s == kAbsent; }))
            out.push_back(index_.position(p));
    }
    return out;
}

PreceqRelation preceq(const Graph& g, int k, std::optional<int> i, const SolveLimits& limits) {
    if (k < 1) throw PreconditionError("need at least one cop");
    if (i && *i < 0) throw PreconditionError("negative stage");
    const int n = g.order();
    const std::uint64_t pairs = saturating_mul(binomial(static_cast<std::uint64_t>(n + k - 1), static_cast<std::uint64_t>(k)),
                                               static_cast<std::uint64_t>(n));
    if (pairs > limits.state_budget)
        throw ResourceError("relation size " + std::to_string(pairs) + " exceeds the state budget of " +
                                std::to_string(limits.state_budget),
                            limits.state_budget);

    PreceqRelation rel(n, k);
    const std::size_t positions = rel.index_.count();
    const auto nn = static_cast<std::size_t>(n);
    rel.stage_.assign(positions * nn, PreceqRelation::kAbsent);
    std::vector<VertexSet> member(positions, VertexSet(n));
    for (std::size_t p = 0; p < positions; ++p)
        for (auto c : rel.index_.at(p)) {
            rel.stage_[p * nn + c] = 0;
            member[p].insert(c);
        }

    std::vector<std::vector<std::size_t>> steps(positions);
    for (std::size_t p = 0; p < positions; ++p) team_steps(g, rel.index_, rel.index_.at(p), steps[p]);

    std::vector<VertexSet> neighbourhood;
    for (Vertex x = 0; x < n; ++x) neighbourhood.push_back(g.neighborhood(x));

    const int cap = i.value_or(32767);
    bool changed = true;
    while (rel.depth_ < cap && changed) {
        const int next = rel.depth_ + 1;
        changed = false;
        // reach[p]: robber vertices y with y ⪯_{<next} q for some step q of p
        std::vector<VertexSet> reach(positions, VertexSet(n));
        for (std::size_t p = 0; p < positions; ++p)
            for (auto q : steps[p]) reach[p] |= member[q];
        for (std::size_t p = 0; p < positions; ++p)
            for (Vertex x = 0; x < n; ++x) {
                auto& s = rel.stage_[p * nn + static_cast<std::size_t>(x)];
                if (s != PreceqRelation::kAbsent) continue;
                if (neighbourhood[static_cast<std::size_t>(x)].is_subset_of(reach[p])) {
                    s = static_cast<std::int16_t>(next);
                    changed = true;
                }
            }
        if (!changed) break;
        for (std::size_t p = 0; p < positions; ++p)
            for (Vertex x = 0; x < n; ++x)
                if (rel.stage_[p * nn + static_cast<std::size_t>(x)] == next) member[p].insert(x);
        rel.depth_ = next;
    }
    rel.stable_ = !changed;
    if (i) rel.depth_ = *i;
    return rel;
}

bool preceq_fixpoint_wins(const Graph& g, int k, const SolveLimits& limits) {
    return !preceq(g, k, std::nullopt, limits).universal_positions().empty();
}

}  // namespace copnum
