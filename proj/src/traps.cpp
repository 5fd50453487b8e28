#include "copnum/traps.hpp"

#include <algorithm>
#include <cmath>

#include "copnum/errors.hpp"
#include "copnum/numeric.hpp"

namespace copnum {

namespace {

void check_vertex(const Graph& g, Vertex v) {
    if (v < 0 || v >= g.order()) throw PreconditionError("vertex out of range");
}

int floor_of(double s) {
    if (!std::isfinite(s)) throw PreconditionError("trap size must be finite");
    return s < 0 ? -1 : static_cast<int>(std::floor(s));
}

}  // namespace

Hypergraph trap_hypergraph(const Graph& g, Vertex v) {
    check_vertex(g, v);
    Hypergraph h(g.order());
    for (Vertex u : g.neighbors(v)) {
        std::vector<int> edge{u};
        for (Vertex w : g.neighbors(u))
            if (w != v) edge.push_back(w);
        h.add_edge(std::move(edge));
    }
    return h;
}

Transversal trap_placement(const Graph& g, Vertex v) { return min_transversal(trap_hypergraph(g, v)); }

int trap_threshold(const Graph& g, Vertex v) { return trap_placement(g, v).size; }

bool is_s_trap(const Graph& g, Vertex v, double s) { return trap_threshold(g, v) <= floor_of(s); }

int count_alpha_traps(const Graph& g, double alpha, bool check_range) {
    if (check_range && (alpha * alpha < g.order() || alpha > g.order()))
        throw PreconditionError("alpha must lie in [sqrt(n), n]");
    return trap_report(g).count_alpha(alpha);
}

int TrapReport::min_threshold() const {
    return thresholds.empty() ? 0 : *std::min_element(thresholds.begin(), thresholds.end());
}

int TrapReport::count_within(int cops) const {
    return static_cast<int>(std::count_if(thresholds.begin(), thresholds.end(), [cops](int t) { return t <= cops; }));
}

int TrapReport::count_alpha(double alpha) const { return count_within(floor_of(alpha)); }

TrapReport trap_report(const Graph& g) {
    TrapReport report;
    for (Vertex v = 0; v < g.order(); ++v) report.thresholds.push_back(trap_threshold(g, v));
    return report;
}

bool check_lemma4(const TrapReport& report) {
    return report.min_threshold() <= static_cast<int>(isqrt(static_cast<std::uint64_t>(report.order())));
}

bool check_lemma4(const Graph& g) { return check_lemma4(trap_report(g)); }

double lemma5_bound(int n, int alpha) { return alpha - std::sqrt(static_cast<double>(n - alpha)) - 1.0; }

bool lemma5_holds(int count, int n, int alpha) {
    if (alpha > n) throw PreconditionError("alpha exceeds n");
    // count > alpha - sqrt(s) - 1  <=>  d > -sqrt(s) with d = count + 1 - alpha
    const long long d = static_cast<long long>(count) + 1 - alpha;
    const long long s = n - alpha;
    if (d > 0) return true;
    if (d == 0) return s > 0;
    return d * d < s;
}

std::vector<Lemma5Row> check_lemma5(const TrapReport& report) {
    const int n = report.order();
    std::vector<Lemma5Row> rows;
    for (int alpha = static_cast<int>(isqrt_ceil(static_cast<std::uint64_t>(n))); alpha <= n; ++alpha) {
        int count = report.count_within(alpha);
        rows.push_back({alpha, count, lemma5_holds(count, n, alpha)});
    }
    return rows;
}

}  // namespace copnum
