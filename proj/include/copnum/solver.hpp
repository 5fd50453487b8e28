#pragma once

#include <memory>
#include <optional>

#include "copnum/game.hpp"
#include "copnum/graph.hpp"
#include "copnum/positions.hpp"

namespace copnum {

struct SolverTables;

/// Outcome of one exact solve: win labels and capture levels for every
/// state, plus strategy tables for both sides. Immutable and cheap to copy
/// (the tables are shared).
///
/// Levels count cop rounds to capture under optimal play: a cops-to-move
/// state at level L is captured after exactly L more cop moves against a
/// robber that delays as long as possible. Terminal states have level 0.
class SolveResult {
public:
    bool cops_win() const;

    /// Optimal number of cop rounds from placement, when the cops win.
    std::optional<int> capture_rounds() const;

    /// Best cop placement (lowest rank among the fastest winning ones); when
    /// the robber wins, the placement leaving him the fewest escapes.
    CopPosition initial_position() const;

    /// Capture level of a state; nullopt when the robber wins from it.
    /// Throws PreconditionError for states outside the solved instance.
    std::optional<int> level(const GameState& state) const;
    bool is_cop_win(const GameState& state) const { return level(state).has_value(); }

    /// Level-decreasing cop move from a cop-winning, non-terminal
    /// cops-to-move state.
    CopPosition cop_move(const CopPosition& cops, Vertex robber) const;

    /// Move keeping a robber-winning robber-to-move state inside the robber
    /// win region (lowest label).
    Vertex robber_move(const CopPosition& cops, Vertex robber) const;

    /// Robber's best answer to a placement: a robber-winning vertex if one
    /// exists, otherwise the vertex with the slowest capture.
    Vertex robber_placement(const CopPosition& cops) const;

    /// Arena moves available to a robber at `robber` (ascending).
    std::vector<Vertex> robber_options(Vertex robber) const;

    /// Does the robber lose on arriving at `robber` with cops at `cops`?
    bool captured(const CopPosition& cops, Vertex robber) const;

    const Graph& graph() const;
    const GameConfig& config() const;
    std::size_t state_count() const;
    std::size_t cop_win_state_count() const;

private:
    friend SolveResult cops_win(const Graph&, const GameConfig&, const SolveLimits&);
    explicit SolveResult(std::shared_ptr<const SolverTables> tables) : tables_(std::move(tables)) {}

    std::shared_ptr<const SolverTables> tables_;
};

/// Exact decision of the game described by `config` on `g` by backward
/// induction from the capture states.
///
/// Rules: cops place first, then the robber picks an arena vertex knowing
/// the placement; play alternates starting with the cops. Standard variant:
/// each cop moves along an edge or stays (if allowed), and capture happens
/// whenever a cop and the robber share a vertex. Teleport variant: each cop
/// jumps to any vertex other than the robber's, and the robber loses when
/// his move (or placement) ends in a cop's closed (or, optionally, open)
/// neighbourhood.
///
/// Throws ResourceError when the estimated state count exceeds the budget
/// or the deadline passes, PreconditionError for a disconnected graph
/// without allow_disconnected or an invalid configuration.
SolveResult cops_win(const Graph& g, const GameConfig& config, const SolveLimits& limits = {});

/// Least k for which the cops win. When `resolved` is false a solve ran out
/// of budget and `value` is only a lower bound.
struct CopNumber {
    int value = 0;
    bool resolved = true;
    friend bool operator==(const CopNumber&, const CopNumber&) = default;
};

struct CopNumberOptions {
    SolveLimits limits;
    bool allow_disconnected = false;  ///< sum over components
    bool robber_may_pass = true;
    Neighbourhood teleport_capture = Neighbourhood::closed;
    int max_cops = 0;                  ///< 0: the order of the arena
    int dismantlable_check_limit = 64; ///< cross-check k = 1 with is_dismantlable up to this order
};

CopNumber cop_number(const Graph& g, const CopNumberOptions& options = {});

/// c_G(H): cops needed when the robber is confined to `arena`.
CopNumber restricted_cop_number(const Graph& g, const Arena& arena, const CopNumberOptions& options = {});

/// c_T(G), teleport variant.
CopNumber teleport_cop_number(const Graph& g, const CopNumberOptions& options = {});

/// Largest order accepted by restricted_cop_number_of_order.
inline constexpr int kMaxSubarenaOrder = 8;

/// c_G(m): maximum of c_G(H) over the induced m-vertex arenas H. Throws
/// ResourceError if any of the C(n,m) solves is unresolved.
int restricted_cop_number_of_order(const Graph& g, int m, const CopNumberOptions& options = {});

/// Robber move for a robber-to-move state: stays in the robber win region
/// when possible, else maximises the capture level (lowest label on ties).
Vertex optimal_robber_move(const GameState& state, const SolveResult& result);

}  // namespace copnum
