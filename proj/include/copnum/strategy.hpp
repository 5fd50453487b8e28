#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "copnum/graph.hpp"
#include "copnum/vertex_set.hpp"

namespace copnum {

struct StationaryCop {
    Vertex vertex = 0;
    int arena_order = 0;  ///< order m of the arena it was parked in
    int degree = 0;       ///< its degree inside that arena
};

/// Cop allocation from the degree-peeling induction: park a cop on a
/// high-degree vertex, drop its closed neighbourhood from the robber's
/// arena, repeat until the arena's degrees are small.
struct CopPlan {
    std::vector<StationaryCop> stationary;
    VertexSet residual;  ///< robber arena left over (induced in G)
    int residual_max_degree = 0;
    int mobile_cops = 0;
    int budget = 0;  ///< floor(sqrt(2n))

    int total_cops() const { return static_cast<int>(stationary.size()) + mobile_cops; }
};

/// Needs g connected with diameter <= 2, or bipartite with diameter 3;
/// throws PreconditionError otherwise.
CopPlan build_theorem1_plan(const Graph& g);

/// Bounded-degree chase: cops occupy the robber's arena neighbours' closed
/// neighbourhoods one-to-one, then one steps next to the robber.
///
/// Given mobile cop positions (in cop order) and a robber on an arena
/// vertex, returns the cops' next positions. A cop adjacent to the robber
/// captures. Otherwise, when every arena neighbour t of the robber is
/// matched to its own cop inside N[t], the cop matched to the lowest
/// neighbour steps onto it and the rest hold. Otherwise matched cops hold
/// and the rest are assigned greedily by (distance to N[t], cop index,
/// target) and step towards their target; spare cops head for N[robber].
/// Throws PreconditionError if the robber has more arena neighbours than
/// there are cops.
class Lemma2Strategy {
public:
    Lemma2Strategy(const Graph& g, VertexSet arena);

    std::vector<Vertex> move(std::span<const Vertex> cops, Vertex robber) const;
    int distance(Vertex a, Vertex b) const { return dist_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
    const VertexSet& arena() const { return arena_; }

private:
    // One step from `from` towards N[target] (stays if already there).
    Vertex step_towards(Vertex from, Vertex target) const;

    const Graph* g_;
    VertexSet arena_;
    std::vector<std::vector<int>> dist_;
};

std::vector<Vertex> lemma2_move(const Graph& g, const VertexSet& arena, std::span<const Vertex> cops, Vertex robber);

/// The full cop team for a plan: stationary cops first (in plan order),
/// then the mobile ones. Mobile cops start on the first stationary vertex,
/// or on vertex 0 when there is none.
class PlanStrategy {
public:
    PlanStrategy(const Graph& g, CopPlan plan);

    std::vector<Vertex> initial() const;
    std::vector<Vertex> move(std::span<const Vertex> cops, Vertex robber) const;
    const CopPlan& plan() const { return plan_; }
    const Graph& graph() const { return *g_; }

private:
    const Graph* g_;
    CopPlan plan_;
    Lemma2Strategy chase_;
};

enum class RobberPolicy {
    optimal,          ///< exact solver tables of the game with total_cops cops
    greedy_distance,  ///< maximise distance to the nearest cop, lowest label
    adversarial,      ///< exact worst case against this cop strategy
};

std::string policy_name(RobberPolicy p);
RobberPolicy policy_from_name(std::string_view name);

struct TraceRound {
    int round = 0;  ///< 0 is the placement
    std::vector<Vertex> cops;
    Vertex robber = 0;
    friend bool operator==(const TraceRound&, const TraceRound&) = default;
};

struct StrategyTrace {
    std::vector<TraceRound> rounds;
    bool captured = false;
    int capture_round = 0;  ///< valid when captured
    int round_cap = 0;
    friend bool operator==(const StrategyTrace&, const StrategyTrace&) = default;
};

/// One line per round, "round=i cops=a,b,c robber=r", then
/// "outcome=captured round=N cap=C" or "outcome=survived cap=C".
std::string format_trace(const StrategyTrace& trace);
StrategyTrace parse_trace(std::string_view text);

/// Checks every move of a trace against g: each cop and the robber move
/// along an edge or stay, and the outcome matches the first coincidence.
/// Returns a description of the first problem, or nullopt.
std::optional<std::string> check_trace(const Graph& g, const StrategyTrace& trace);

/// Plays the plan's cop strategy against a robber policy for at most
/// `max_rounds` cop rounds (0: 4n). The optimal policy needs a solvable
/// instance (ResourceError otherwise).
StrategyTrace simulate(const Graph& g, const CopPlan& plan, RobberPolicy policy, int max_rounds = 0);

inline constexpr std::uint64_t kDefaultStrategyStateBudget = 5'000'000;

/// Longest capture over every robber behaviour against the plan's
/// deterministic cops; nullopt when some robber evades forever.
std::optional<int> adversarial_capture_bound(const Graph& g, const CopPlan& plan,
                                             std::uint64_t state_budget = kDefaultStrategyStateBudget);

/// Values of m in [4, m_max] with 1 + isqrt(2(m - isqrt(2m) - 2)) > isqrt(2m).
std::vector<std::uint64_t> verify_key_inequality(std::uint64_t m_max);

}  // namespace copnum
