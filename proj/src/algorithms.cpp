#include "copnum/algorithms.hpp"

#include <algorithm>
#include <deque>

#include "copnum/errors.hpp"

namespace copnum {

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
    std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
    std::deque<Vertex> queue{source};
    dist[static_cast<std::size_t>(source)] = 0;
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbors(u)) {
            auto& d = dist[static_cast<std::size_t>(w)];
            if (d < 0) {
                d = dist[static_cast<std::size_t>(u)] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

std::vector<std::vector<int>> distance_matrix(const Graph& g) {
    std::vector<std::vector<int>> d;
    d.reserve(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) d.push_back(bfs_distances(g, v));
    return d;
}

bool is_connected(const Graph& g) {
    auto d = bfs_distances(g, 0);
    return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
    std::vector<std::vector<Vertex>> out;
    std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        auto d = bfs_distances(g, s);
        std::vector<Vertex> comp;
        for (Vertex v = 0; v < g.order(); ++v) {
            if (d[static_cast<std::size_t>(v)] >= 0) {
                comp.push_back(v);
                seen[static_cast<std::size_t>(v)] = true;
            }
        }
        out.push_back(std::move(comp));
    }
    return out;
}

std::optional<int> diameter(const Graph& g) {
    int best = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        for (int d : bfs_distances(g, v)) {
            if (d < 0) return std::nullopt;
            best = std::max(best, d);
        }
    }
    return best;
}

bool is_bipartite(const Graph& g) {
    std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (side[static_cast<std::size_t>(s)] >= 0) continue;
        side[static_cast<std::size_t>(s)] = 0;
        std::deque<Vertex> queue{s};
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            for (Vertex w : g.neighbors(u)) {
                auto& sw = side[static_cast<std::size_t>(w)];
                if (sw < 0) {
                    sw = 1 - side[static_cast<std::size_t>(u)];
                    queue.push_back(w);
                } else if (sw == side[static_cast<std::size_t>(u)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::optional<int> girth(const Graph& g) {
    std::optional<int> best;
    // A BFS from every vertex sees a shortest cycle through its root.
    for (Vertex s = 0; s < g.order(); ++s) {
        std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
        std::vector<Vertex> parent(static_cast<std::size_t>(g.order()), -1);
        std::deque<Vertex> queue{s};
        dist[static_cast<std::size_t>(s)] = 0;
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            for (Vertex w : g.neighbors(u)) {
                auto iw = static_cast<std::size_t>(w);
                if (dist[iw] < 0) {
                    dist[iw] = dist[static_cast<std::size_t>(u)] + 1;
                    parent[iw] = u;
                    queue.push_back(w);
                } else if (parent[static_cast<std::size_t>(u)] != w) {
                    int len = dist[static_cast<std::size_t>(u)] + dist[iw] + 1;
                    if (!best || len < *best) best = len;
                }
            }
        }
    }
    return best;
}

bool is_dismantlable(const Graph& g) {
    if (!is_connected(g)) throw PreconditionError("is_dismantlable requires a connected graph");
    const int n = g.order();
    VertexSet alive = VertexSet::full(n);
    std::vector<VertexSet> closed;
    closed.reserve(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) closed.push_back(g.closed_neighborhood(v));

    int remaining = n;
    while (remaining > 1) {
        Vertex dominated = -1;
        for (Vertex u = 0; u < n && dominated < 0; ++u) {
            if (!alive.contains(u)) continue;
            VertexSet nu = closed[static_cast<std::size_t>(u)] & alive;
            for (Vertex w = 0; w < n; ++w) {
                if (w == u || !alive.contains(w)) continue;
                if (nu.is_subset_of(closed[static_cast<std::size_t>(w)])) {
                    dominated = u;
                    break;
                }
            }
        }
        if (dominated < 0) return false;
        alive.erase(dominated);
        --remaining;
    }
    return true;
}

std::optional<InducedSubgraph> delete_closed_neighborhood(const Graph& g, Vertex v) {
    VertexSet rest = VertexSet::full(g.order()) - g.closed_neighborhood(v);
    if (rest.empty()) return std::nullopt;
    auto keep = rest.to_vector();
    return InducedSubgraph{g.induced(keep), keep};
}

}  // namespace copnum
