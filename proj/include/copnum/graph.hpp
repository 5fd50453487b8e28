#pragma once

#include <span>
#include <vector>

#include "copnum/vertex_set.hpp"

namespace copnum {

struct Edge {
    Vertex u;
    Vertex v;
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..order()-1.
///
/// Adjacency is kept twice: sorted neighbour lists for iteration and one
/// bitset row per vertex for O(1) membership and set algebra. Adding an
/// existing edge is a no-op, so the relation stays a set.
class Graph {
public:
    explicit Graph(int order);

    static Graph from_edges(int order, std::span<const Edge> edges);

    int order() const { return order_; }
    int edge_count() const { return edge_count_; }

    void add_edge(Vertex u, Vertex v);

    bool adjacent(Vertex u, Vertex v) const { return rows_[idx(u)].contains(v); }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[idx(v)]; }
    const VertexSet& neighborhood(Vertex v) const { return rows_[idx(v)]; }
    VertexSet closed_neighborhood(Vertex v) const;
    int degree(Vertex v) const { return static_cast<int>(adj_[idx(v)].size()); }
    int max_degree() const;
    int min_degree() const;

    /// Edges with u < v, in ascending (u, v) order.
    std::vector<Edge> edges() const;

    /// Induced subgraph on `keep` (ascending, distinct), relabelled 0..|keep|-1
    /// in the given order.
    Graph induced(std::span<const Vertex> keep) const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.order_ == b.order_ && a.rows_ == b.rows_; }

private:
    std::size_t idx(Vertex v) const;

    int order_;
    int edge_count_ = 0;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<VertexSet> rows_;
};

}  // namespace copnum
