#include "copnum/game.hpp"

#include <algorithm>
#include <string>

#include "copnum/errors.hpp"
#include "copnum/numeric.hpp"

namespace copnum {

Arena::Arena(VertexSet vertices, std::vector<std::vector<Vertex>> adj) : vertices_(std::move(vertices)), adj_(std::move(adj)) {
    if (vertices_.empty()) throw PreconditionError("robber arena must be nonempty");
}

Arena Arena::whole(const Graph& g) {
    std::vector<std::vector<Vertex>> adj;
    adj.reserve(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) adj.push_back(g.neighbors(v));
    return Arena(VertexSet::full(g.order()), std::move(adj));
}

Arena Arena::induced(const Graph& g, const VertexSet& vertices) {
    if (vertices.capacity() != g.order()) throw PreconditionError("arena vertex set does not match graph order");
    std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(g.order()));
    vertices.for_each([&](Vertex v) {
        for (Vertex w : g.neighbors(v))
            if (vertices.contains(w)) adj[static_cast<std::size_t>(v)].push_back(w);
    });
    return Arena(vertices, std::move(adj));
}

Arena Arena::subgraph(const Graph& g, const VertexSet& vertices, std::span<const Edge> edges) {
    if (vertices.capacity() != g.order()) throw PreconditionError("arena vertex set does not match graph order");
    std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(g.order()));
    for (const auto& e : edges) {
        if (e.u < 0 || e.v < 0 || e.u >= g.order() || e.v >= g.order() || !vertices.contains(e.u) ||
            !vertices.contains(e.v))
            throw PreconditionError("arena edge endpoint outside the arena");
        if (!g.adjacent(e.u, e.v))
            throw PreconditionError("arena edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " is not an edge of G");
        adj[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (auto& a : adj) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    return Arena(vertices, std::move(adj));
}

int Arena::max_degree() const {
    int best = 0;
    vertices_.for_each([&](Vertex v) { best = std::max(best, static_cast<int>(adj_[static_cast<std::size_t>(v)].size())); });
    return best;
}

std::uint64_t estimated_state_count(int n, int k) {
    std::uint64_t positions = binomial(static_cast<std::uint64_t>(n + k - 1), static_cast<std::uint64_t>(k));
    return saturating_mul(saturating_mul(positions, static_cast<std::uint64_t>(n)), 2);
}

}  // namespace copnum
