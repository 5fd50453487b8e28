#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "copnum/graph.hpp"
#include "copnum/positions.hpp"

namespace copnum {

enum class Variant { standard, teleport };

/// Which neighbourhood of a teleporting cop catches the robber.
enum class Neighbourhood { closed, open };

/// The subgraph the robber is confined to. Cops still use all of G.
class Arena {
public:
    static Arena whole(const Graph& g);
    static Arena induced(const Graph& g, const VertexSet& vertices);
    /// Arena with an explicit edge list; every edge must join two arena
    /// vertices and be an edge of g.
    static Arena subgraph(const Graph& g, const VertexSet& vertices, std::span<const Edge> edges);

    int graph_order() const { return vertices_.capacity(); }
    int size() const { return vertices_.size(); }
    const VertexSet& vertices() const { return vertices_; }
    bool contains(Vertex v) const { return vertices_.contains(v); }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    int max_degree() const;

private:
    Arena(VertexSet vertices, std::vector<std::vector<Vertex>> adj);

    VertexSet vertices_;
    std::vector<std::vector<Vertex>> adj_;
};

/// Fully pins down one game instance.
struct GameConfig {
    int cops = 1;
    Variant variant = Variant::standard;
    bool robber_may_pass = true;
    bool cops_may_pass = true;  ///< standard variant only
    Neighbourhood teleport_capture = Neighbourhood::closed;
    std::optional<Arena> robber_arena;  ///< absent: the whole graph
    bool allow_disconnected = false;
};

inline constexpr std::uint64_t kDefaultStateBudget = 50'000'000;

struct SolveLimits {
    std::uint64_t state_budget = kDefaultStateBudget;
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

enum class Turn { cops, robber };

struct GameState {
    CopPosition cops;
    Vertex robber = 0;
    Turn turn = Turn::cops;
};

/// C(n+k-1, k) * n * 2, saturating.
std::uint64_t estimated_state_count(int n, int k);

}  // namespace copnum
