#pragma once

#include <optional>
#include <vector>

#include "copnum/graph.hpp"

namespace copnum {

/// Breadth-first distances from `source`; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

/// All-pairs shortest-path lengths, -1 for unreachable pairs.
std::vector<std::vector<int>> distance_matrix(const Graph& g);

bool is_connected(const Graph& g);

/// Connected components, each sorted ascending, ordered by lowest vertex.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

/// Largest shortest-path length over vertex pairs; nullopt when the graph
/// is disconnected (infinite diameter). K_1 has diameter 0.
std::optional<int> diameter(const Graph& g);

bool is_bipartite(const Graph& g);

/// Length of a shortest cycle, nullopt for forests.
std::optional<int> girth(const Graph& g);

/// Cop-win oracle: repeatedly remove a vertex u whose closed neighbourhood
/// lies inside the closed neighbourhood of another remaining vertex; the
/// graph is dismantlable iff this ends at a single vertex.
/// Throws PreconditionError on disconnected input.
bool is_dismantlable(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> original;  ///< original[i] is the label in the parent graph
};

/// Induced subgraph on V - N[v]; nullopt when nothing remains.
std::optional<InducedSubgraph> delete_closed_neighborhood(const Graph& g, Vertex v);

}  // namespace copnum
