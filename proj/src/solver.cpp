#include "copnum/solver.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "copnum/algorithms.hpp"
#include "copnum/errors.hpp"

namespace copnum {

namespace {

constexpr std::int32_t kUnknown = -1;  // robber wins (after solving)
constexpr std::int32_t kInvalid = -2;  // state cannot occur

class DeadlineGuard {
public:
    explicit DeadlineGuard(const SolveLimits& limits) : limits_(limits) {}
    void tick() {
        if (!limits_.deadline || (++ticks_ & 0xFFFF) != 0) return;
        if (std::chrono::steady_clock::now() > *limits_.deadline) throw ResourceError("solve deadline exceeded", 0);
    }

private:
    const SolveLimits& limits_;
    std::uint64_t ticks_ = 0;
};

}  // namespace

struct SolverTables {
    Graph graph;
    Arena arena;
    GameConfig config;
    PositionIndex index;
    std::vector<std::vector<Vertex>> robber_moves;
    std::vector<std::int32_t> cop_level;     // cops to move, index p*n + r
    std::vector<std::int32_t> robber_level;  // robber to move
    std::vector<std::int32_t> cop_choice;
    bool cops_win = false;
    int value = -1;
    std::size_t initial = 0;
    std::size_t cop_win_states = 0;

    SolverTables(const Graph& g, Arena a, const GameConfig& c)
        : graph(g), arena(std::move(a)), config(c), index(g.order(), c.cops) {}

    std::size_t n() const { return static_cast<std::size_t>(graph.order()); }

    bool capture_on_arrival(std::span<const std::uint16_t> cops, Vertex r) const {
        if (config.variant == Variant::standard) {
            return std::find(cops.begin(), cops.end(), r) != cops.end();
        }
        for (auto c : cops) {
            if (graph.adjacent(c, r)) return true;
            if (c == r && config.teleport_capture == Neighbourhood::closed) return true;
        }
        return false;
    }

    static bool occupied(std::span<const std::uint16_t> cops, Vertex r) {
        return std::find(cops.begin(), cops.end(), r) != cops.end();
    }

    std::size_t state_index(const CopPosition& cops, Vertex robber) const {
        if (cops.size() != config.cops) throw PreconditionError("state has the wrong number of cops");
        for (Vertex c : cops.cops())
            if (c < 0 || c >= graph.order()) throw PreconditionError("cop vertex out of range");
        if (robber < 0 || robber >= graph.order() || !arena.contains(robber))
            throw PreconditionError("robber vertex outside the arena");
        return index.rank(cops) * n() + static_cast<std::size_t>(robber);
    }
};

namespace {

/// Reflexive strong-product moves of every position, as CSR over ranks.
/// The relation is symmetric, so it also lists predecessors.
void build_cop_moves(const SolverTables& t, const SolveLimits& limits, std::vector<std::uint32_t>& offsets,
                     std::vector<std::uint32_t>& targets) {
    const int k = t.config.cops;
    const std::size_t count = t.index.count();
    offsets.assign(count + 1, 0);
    targets.clear();
    std::vector<std::vector<Vertex>> options(static_cast<std::size_t>(k));
    std::vector<std::size_t> odometer(static_cast<std::size_t>(k));
    std::vector<Vertex> tuple(static_cast<std::size_t>(k));
    std::vector<std::uint32_t> local;
    for (std::size_t id = 0; id < count; ++id) {
        auto cops = t.index.at(id);
        for (int i = 0; i < k; ++i) {
            auto& o = options[static_cast<std::size_t>(i)];
            o = t.graph.neighbors(cops[static_cast<std::size_t>(i)]);
            if (t.config.cops_may_pass) o.push_back(cops[static_cast<std::size_t>(i)]);
        }
        local.clear();
        bool any = std::all_of(options.begin(), options.end(), [](const auto& o) { return !o.empty(); });
        std::fill(odometer.begin(), odometer.end(), 0);
        while (any) {
            for (int i = 0; i < k; ++i)
                tuple[static_cast<std::size_t>(i)] = options[static_cast<std::size_t>(i)][odometer[static_cast<std::size_t>(i)]];
            std::sort(tuple.begin(), tuple.end());
            local.push_back(static_cast<std::uint32_t>(t.index.rank(tuple)));
            int i = 0;
            while (i < k && ++odometer[static_cast<std::size_t>(i)] == options[static_cast<std::size_t>(i)].size()) {
                odometer[static_cast<std::size_t>(i)] = 0;
                ++i;
            }
            if (i == k) break;
        }
        std::sort(local.begin(), local.end());
        local.erase(std::unique(local.begin(), local.end()), local.end());
        targets.insert(targets.end(), local.begin(), local.end());
        offsets[id + 1] = static_cast<std::uint32_t>(targets.size());
        if (targets.size() > 4 * limits.state_budget || targets.size() > std::numeric_limits<std::uint32_t>::max() / 2)
            throw ResourceError("cop move table exceeds the state budget of " + std::to_string(limits.state_budget),
                                limits.state_budget);
    }
}

void solve(SolverTables& t, const SolveLimits& limits) {
    const std::size_t n = t.n();
    const std::size_t positions = t.index.count();
    const std::size_t states = positions * n;
    const bool teleport = t.config.variant == Variant::teleport;
    DeadlineGuard guard(limits);

    t.robber_moves.assign(n, {});
    for (Vertex r = 0; r < static_cast<Vertex>(n); ++r) {
        if (!t.arena.contains(r)) continue;
        auto& m = t.robber_moves[static_cast<std::size_t>(r)];
        m = t.arena.neighbors(r);
        if (t.config.robber_may_pass) m.insert(std::upper_bound(m.begin(), m.end(), r), r);
    }

    std::vector<std::uint32_t> move_offsets;
    std::vector<std::uint32_t> move_targets;
    if (!teleport) build_cop_moves(t, limits, move_offsets, move_targets);

    t.cop_level.assign(states, kInvalid);
    t.robber_level.assign(states, kInvalid);
    t.cop_choice.assign(states, -1);
    std::vector<std::uint16_t> pending(states, 0);

    std::vector<std::uint32_t> cop_layer;
    std::vector<std::uint32_t> robber_layer;
    for (std::size_t p = 0; p < positions; ++p) {
        auto cops = t.index.at(p);
        for (Vertex r = 0; r < static_cast<Vertex>(n); ++r) {
            if (!t.arena.contains(r)) continue;
            const std::size_t s = p * n + static_cast<std::size_t>(r);
            if (t.capture_on_arrival(cops, r)) {
                t.cop_level[s] = 0;
                cop_layer.push_back(static_cast<std::uint32_t>(s));
            } else {
                t.cop_level[s] = kUnknown;
            }
            if (SolverTables::occupied(cops, r)) {
                // teleporting cops never land on the robber
                if (!teleport) {
                    t.robber_level[s] = 0;
                    robber_layer.push_back(static_cast<std::uint32_t>(s));
                }
                continue;
            }
            auto moves = t.robber_moves[static_cast<std::size_t>(r)].size();
            t.robber_level[s] = kUnknown;
            pending[s] = static_cast<std::uint16_t>(moves);
            if (moves == 0) {
                t.robber_level[s] = 0;
                robber_layer.push_back(static_cast<std::uint32_t>(s));
            }
        }
    }

    std::vector<char> teleport_done(teleport ? n : 0, 0);
    std::vector<std::uint32_t> next_cop_layer;
    for (std::int32_t level = 0; !cop_layer.empty() || !robber_layer.empty(); ++level) {
        // robber-to-move states whose last escape just closed
        for (std::uint32_t s : cop_layer) {
            guard.tick();
            const std::size_t q = s / n;
            const Vertex arrived = static_cast<Vertex>(s % n);
            for (Vertex r : t.robber_moves[static_cast<std::size_t>(arrived)]) {
                // robber moves are symmetric: r -> arrived iff arrived -> r
                const std::size_t rs = q * n + static_cast<std::size_t>(r);
                if (t.robber_level[rs] == kUnknown && --pending[rs] == 0) {
                    t.robber_level[rs] = level;
                    robber_layer.push_back(static_cast<std::uint32_t>(rs));
                }
            }
        }
        next_cop_layer.clear();
        for (std::uint32_t s : robber_layer) {
            guard.tick();
            const std::size_t q = s / n;
            const std::size_t r = s % n;
            if (teleport) {
                if (teleport_done[r]) continue;
                teleport_done[r] = 1;
                for (std::size_t p = 0; p < positions; ++p) {
                    const std::size_t cs = p * n + r;
                    if (t.cop_level[cs] == kUnknown) {
                        t.cop_level[cs] = level + 1;
                        t.cop_choice[cs] = static_cast<std::int32_t>(q);
                        next_cop_layer.push_back(static_cast<std::uint32_t>(cs));
                    }
                }
                continue;
            }
            for (std::uint32_t e = move_offsets[q]; e < move_offsets[q + 1]; ++e) {
                const std::size_t cs = static_cast<std::size_t>(move_targets[e]) * n + r;
                if (t.cop_level[cs] == kUnknown) {
                    t.cop_level[cs] = level + 1;
                    t.cop_choice[cs] = static_cast<std::int32_t>(q);
                    next_cop_layer.push_back(static_cast<std::uint32_t>(cs));
                }
            }
        }
        robber_layer.clear();
        std::swap(cop_layer, next_cop_layer);
    }

    std::size_t fewest_escapes = std::numeric_limits<std::size_t>::max();
    for (std::size_t p = 0; p < positions; ++p) {
        std::int32_t worst = 0;
        std::size_t escapes = 0;
        for (std::size_t r = 0; r < n; ++r) {
            const auto lv = t.cop_level[p * n + r];
            if (lv == kInvalid) continue;
            if (lv == kUnknown) {
                ++escapes;
            } else {
                worst = std::max(worst, lv);
            }
        }
        if (escapes == 0) {
            if (!t.cops_win || worst < t.value) {
                t.cops_win = true;
                t.value = worst;
                t.initial = p;
            }
        } else if (!t.cops_win && escapes < fewest_escapes) {
            fewest_escapes = escapes;
            t.initial = p;
        }
    }
    t.cop_win_states = static_cast<std::size_t>(std::count_if(t.cop_level.begin(), t.cop_level.end(), [](auto v) { return v >= 0; }) +
                                                std::count_if(t.robber_level.begin(), t.robber_level.end(), [](auto v) { return v >= 0; }));
}

}  // namespace

SolveResult cops_win(const Graph& g, const GameConfig& config, const SolveLimits& limits) {
    if (config.cops < 1) throw PreconditionError("need at least one cop");
    if (!config.allow_disconnected && !is_connected(g))
        throw PreconditionError("graph is disconnected (set allow_disconnected to solve anyway)");
    if (config.robber_arena && config.robber_arena->graph_order() != g.order())
        throw PreconditionError("robber arena belongs to a graph of different order");
    const auto estimate = estimated_state_count(g.order(), config.cops);
    if (estimate > limits.state_budget)
        throw ResourceError("estimated " + std::to_string(estimate) + " states exceed the budget of " +
                                std::to_string(limits.state_budget),
                            limits.state_budget);

    Arena arena = config.robber_arena ? *config.robber_arena : Arena::whole(g);
    auto tables = std::make_shared<SolverTables>(g, std::move(arena), config);
    solve(*tables, limits);
    return SolveResult(std::move(tables));
}

bool SolveResult::cops_win() const { return tables_->cops_win; }

std::optional<int> SolveResult::capture_rounds() const {
    if (!tables_->cops_win) return std::nullopt;
    return tables_->value;
}

CopPosition SolveResult::initial_position() const { return tables_->index.position(tables_->initial); }

std::optional<int> SolveResult::level(const GameState& state) const {
    const auto s = tables_->state_index(state.cops, state.robber);
    const auto lv = state.turn == Turn::cops ? tables_->cop_level[s] : tables_->robber_level[s];
    if (lv == kInvalid) throw PreconditionError("state cannot occur in this game");
    if (lv == kUnknown) return std::nullopt;
    return lv;
}

CopPosition SolveResult::cop_move(const CopPosition& cops, Vertex robber) const {
    const auto s = tables_->state_index(cops, robber);
    if (tables_->cop_level[s] <= 0) throw PreconditionError("cop_move needs a cop-winning, non-terminal state");
    return tables_->index.position(static_cast<std::size_t>(tables_->cop_choice[s]));
}

Vertex SolveResult::robber_move(const CopPosition& cops, Vertex robber) const {
    const auto s = tables_->state_index(cops, robber);
    if (tables_->robber_level[s] != kUnknown) throw PreconditionError("robber_move needs a robber-winning state");
    const std::size_t base = s - static_cast<std::size_t>(robber);
    for (Vertex y : tables_->robber_moves[static_cast<std::size_t>(robber)])
        if (tables_->cop_level[base + static_cast<std::size_t>(y)] == kUnknown) return y;
    throw std::logic_error("robber-winning state without a robber-winning move");
}

Vertex SolveResult::robber_placement(const CopPosition& cops) const {
    const Vertex any = tables_->arena.vertices().first();
    const std::size_t base = tables_->state_index(cops, any) - static_cast<std::size_t>(any);
    Vertex best = -1;
    std::int32_t best_level = -1;
    bool escape = false;
    tables_->arena.vertices().for_each([&](Vertex r) {
        if (escape) return;
        const auto lv = tables_->cop_level[base + static_cast<std::size_t>(r)];
        if (lv == kUnknown) {
            escape = true;
            best = r;
        } else if (lv > best_level) {
            best = r;
            best_level = lv;
        }
    });
    return best;
}

std::vector<Vertex> SolveResult::robber_options(Vertex robber) const {
    if (robber < 0 || robber >= tables_->graph.order() || !tables_->arena.contains(robber))
        throw PreconditionError("robber vertex outside the arena");
    return tables_->robber_moves[static_cast<std::size_t>(robber)];
}

bool SolveResult::captured(const CopPosition& cops, Vertex robber) const {
    std::vector<std::uint16_t> c(cops.cops().begin(), cops.cops().end());
    return tables_->capture_on_arrival(c, robber);
}

const Graph& SolveResult::graph() const { return tables_->graph; }
const GameConfig& SolveResult::config() const { return tables_->config; }
std::size_t SolveResult::state_count() const { return 2 * tables_->index.count() * tables_->n(); }
std::size_t SolveResult::cop_win_state_count() const { return tables_->cop_win_states; }

namespace {

CopNumber least_winning(const Graph& g, GameConfig config, int upper, const SolveLimits& limits) {
    for (int k = 1; k <= upper; ++k) {
        config.cops = k;
        try {
            if (cops_win(g, config, limits).cops_win()) return {k, true};
        } catch (const ResourceError&) {
            return {k, false};
        }
    }
    return {upper + 1, false};
}

}  // namespace

CopNumber cop_number(const Graph& g, const CopNumberOptions& options) {
    if (!is_connected(g)) {
        if (!options.allow_disconnected)
            throw PreconditionError("graph is disconnected (allow_disconnected sums component cop numbers)");
        CopNumber total{0, true};
        for (const auto& comp : connected_components(g)) {
            CopNumberOptions sub = options;
            sub.allow_disconnected = false;
            auto part = cop_number(g.induced(comp), sub);
            total.value += part.value;
            total.resolved = total.resolved && part.resolved;
        }
        return total;
    }
    GameConfig config;
    config.robber_may_pass = options.robber_may_pass;
    const int upper = options.max_cops > 0 ? options.max_cops : g.order();
    auto result = least_winning(g, config, upper, options.limits);
    if (result.resolved && options.robber_may_pass && g.order() <= options.dismantlable_check_limit &&
        (result.value == 1) != is_dismantlable(g))
        throw std::logic_error("cop number disagrees with the dismantlability oracle");
    return result;
}

CopNumber restricted_cop_number(const Graph& g, const Arena& arena, const CopNumberOptions& options) {
    GameConfig config;
    config.robber_may_pass = options.robber_may_pass;
    config.robber_arena = arena;
    config.allow_disconnected = options.allow_disconnected;
    const int upper = options.max_cops > 0 ? options.max_cops : arena.size();
    return least_winning(g, config, upper, options.limits);
}

CopNumber teleport_cop_number(const Graph& g, const CopNumberOptions& options) {
    GameConfig config;
    config.variant = Variant::teleport;
    config.robber_may_pass = options.robber_may_pass;
    config.teleport_capture = options.teleport_capture;
    config.allow_disconnected = options.allow_disconnected;
    const int upper = options.max_cops > 0 ? options.max_cops : g.order();
    return least_winning(g, config, upper, options.limits);
}

int restricted_cop_number_of_order(const Graph& g, int m, const CopNumberOptions& options) {
    const int n = g.order();
    if (n > kMaxSubarenaOrder)
        throw ResourceError("c_G(m) enumerates all m-subsets; order " + std::to_string(n) + " exceeds " +
                                std::to_string(kMaxSubarenaOrder),
                            kMaxSubarenaOrder);
    if (m < 1 || m > n) throw PreconditionError("arena order must lie in 1..n");
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        if (std::popcount(mask) != m) continue;
        VertexSet vs(n);
        for (Vertex v = 0; v < n; ++v)
            if ((mask >> v) & 1U) vs.insert(v);
        auto c = restricted_cop_number(g, Arena::induced(g, vs), options);
        if (!c.resolved) throw ResourceError("restricted cop number unresolved within budget", options.limits.state_budget);
        best = std::max(best, c.value);
    }
    return best;
}

Vertex optimal_robber_move(const GameState& state, const SolveResult& result) {
    if (state.turn != Turn::robber) throw PreconditionError("optimal_robber_move needs a robber-to-move state");
    auto lv = result.level(state);
    auto options = result.robber_options(state.robber);
    if (options.empty()) throw PreconditionError("robber has no legal move");
    if (!lv) return result.robber_move(state.cops, state.robber);
    Vertex best = options.front();
    int best_level = -1;
    for (Vertex y : options) {
        int l = *result.level({state.cops, y, Turn::cops});
        if (l > best_level) {
            best = y;
            best_level = l;
        }
    }
    return best;
}

}  // namespace copnum
