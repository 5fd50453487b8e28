#include "copnum/graph.hpp"

#include <algorithm>
#include <string>

#include "copnum/errors.hpp"

namespace copnum {

Graph::Graph(int order) : order_(order) {
    if (order < 1) throw PreconditionError("graph order must be at least 1, got " + std::to_string(order));
    adj_.resize(static_cast<std::size_t>(order));
    rows_.assign(static_cast<std::size_t>(order), VertexSet(order));
}

Graph Graph::from_edges(int order, std::span<const Edge> edges) {
    Graph g(order);
    for (const auto& e : edges) g.add_edge(e.u, e.v);
    return g;
}

std::size_t Graph::idx(Vertex v) const {
    if (v < 0 || v >= order_)
        throw PreconditionError("vertex " + std::to_string(v) + " out of range for order " + std::to_string(order_));
    return static_cast<std::size_t>(v);
}

void Graph::add_edge(Vertex u, Vertex v) {
    auto iu = idx(u);
    auto iv = idx(v);
    if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
    if (rows_[iu].contains(v)) return;
    rows_[iu].insert(v);
    rows_[iv].insert(u);
    adj_[iu].insert(std::upper_bound(adj_[iu].begin(), adj_[iu].end(), v), v);
    adj_[iv].insert(std::upper_bound(adj_[iv].begin(), adj_[iv].end(), u), u);
    ++edge_count_;
}

VertexSet Graph::closed_neighborhood(Vertex v) const {
    VertexSet s = rows_[idx(v)];
    s.insert(v);
    return s;
}

int Graph::max_degree() const {
    int best = 0;
    for (const auto& a : adj_) best = std::max(best, static_cast<int>(a.size()));
    return best;
}

int Graph::min_degree() const {
    int best = order_;
    for (const auto& a : adj_) best = std::min(best, static_cast<int>(a.size()));
    return best;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (Vertex u = 0; u < order_; ++u)
        for (Vertex v : adj_[static_cast<std::size_t>(u)])
            if (u < v) out.push_back({u, v});
    return out;
}

Graph Graph::induced(std::span<const Vertex> keep) const {
    Graph h(static_cast<int>(keep.size()));
    std::vector<int> relabel(static_cast<std::size_t>(order_), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) relabel[idx(keep[i])] = static_cast<int>(i);
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (Vertex w : adj_[idx(keep[i])])
            if (relabel[static_cast<std::size_t>(w)] > static_cast<int>(i))
                h.add_edge(static_cast<Vertex>(i), relabel[static_cast<std::size_t>(w)]);
    return h;
}

}  // namespace copnum
