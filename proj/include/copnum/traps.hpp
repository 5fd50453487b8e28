#pragma once

#include <optional>
#include <vector>

#include "copnum/graph.hpp"
#include "copnum/hypergraph.hpp"

namespace copnum {

/// Hypergraph on V(g) with one edge N[u] - {v} per neighbour u of v: a cop
/// set avoiding v controls N(v) exactly when it meets every edge.
Hypergraph trap_hypergraph(const Graph& g, Vertex v);

/// Fewest cops on V(g) - {v} that control every neighbour of v (0 for an
/// isolated vertex), with one optimal placement.
Transversal trap_placement(const Graph& g, Vertex v);
int trap_threshold(const Graph& g, Vertex v);

/// Is v an s-trap, i.e. can floor(s) cops off v control N(v)?
bool is_s_trap(const Graph& g, Vertex v, double s);

/// Number of alpha-traps. With `check_range`, alpha outside [sqrt(n), n]
/// throws PreconditionError.
int count_alpha_traps(const Graph& g, double alpha, bool check_range = false);

struct TrapReport {
    std::vector<int> thresholds;  ///< per vertex

    int order() const { return static_cast<int>(thresholds.size()); }
    int min_threshold() const;
    /// Vertices with threshold <= cops.
    int count_within(int cops) const;
    int count_alpha(double alpha) const;
};

TrapReport trap_report(const Graph& g);

/// Is there a floor(sqrt(n))-trap?
bool check_lemma4(const Graph& g);
bool check_lemma4(const TrapReport& report);

/// alpha - sqrt(n - alpha) - 1, for display only.
double lemma5_bound(int n, int alpha);
/// count > alpha - sqrt(n - alpha) - 1, decided without floating point.
bool lemma5_holds(int count, int n, int alpha);

struct Lemma5Row {
    int alpha = 0;
    int count = 0;
    bool holds = true;
};

/// One row per integer alpha in [ceil(sqrt(n)), n].
std::vector<Lemma5Row> check_lemma5(const TrapReport& report);

}  // namespace copnum
