#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "copnum/graph.hpp"

namespace copnum {

/// Largest order accepted by the enumerators.
inline constexpr int kMaxEnumerationOrder = 8;

/// Largest order accepted by canonical_form.
inline constexpr int kMaxCanonicalOrder = 11;

using GraphVisitor = std::function<void(const Graph&)>;
using GraphFilter = std::function<bool(const Graph&)>;

/// Visits every labelled simple connected graph on n vertices exactly once
/// (2^(n(n-1)/2) candidates, in increasing graph6 bit order). `filter`, when
/// set, drops graphs before they reach `visit`.
void for_each_connected_graph(int n, const GraphVisitor& visit, const GraphFilter& filter = {});

/// Number of labelled connected graphs on n vertices, by enumeration.
std::uint64_t count_connected_labelled(int n);

/// Relabelling that minimises the graph6 adjacency bit string among all
/// labellings compatible with colour refinement. Isomorphic graphs map to
/// identical outputs.
Graph canonical_form(const Graph& g);

/// emit_graph6(canonical_form(g)).
std::string canonical_graph6(const Graph& g);

/// One canonical representative per isomorphism class of graphs on n
/// vertices, sorted by canonical graph6. Built by extending every class on
/// n-1 vertices with a new vertex in all possible ways, so no class is lost.
const std::vector<Graph>& graphs_up_to_isomorphism(int n);

/// Connected subset of graphs_up_to_isomorphism(n).
std::vector<Graph> connected_graphs_up_to_isomorphism(int n);

}  // namespace copnum
