#include "copnum/strategy.hpp"

#include <algorithm>
#include <charconv>
#include <climits>
#include <deque>
#include <map>
#include <sstream>
#include <tuple>

#include "copnum/algorithms.hpp"
#include "copnum/errors.hpp"
#include "copnum/numeric.hpp"
#include "copnum/solver.hpp"

namespace copnum {

CopPlan build_theorem1_plan(const Graph& g) {
    const int n = g.order();
    if (!is_connected(g)) throw PreconditionError("plan needs a connected graph");
    const int d = diameter(g).value_or(0);
    if (d > 3 || (d == 3 && !is_bipartite(g)))
        throw PreconditionError("plan needs diameter at most 2, or a bipartite graph of diameter 3 (diameter is " +
                                std::to_string(d) + ")");
    CopPlan plan;
    plan.budget = static_cast<int>(isqrt(2 * static_cast<std::uint64_t>(n)));
    VertexSet arena = VertexSet::full(n);
    while (true) {
        const int m = arena.size();
        const int threshold = static_cast<int>(isqrt(2 * static_cast<std::uint64_t>(m)));
        Vertex top = -1;
        int top_degree = -1;
        arena.for_each([&](Vertex v) {
            int deg = (g.neighborhood(v) & arena).size();
            if (deg > top_degree) {
                top_degree = deg;
                top = v;
            }
        });
        if (m == 0 || top_degree <= threshold) {
            plan.mobile_cops = threshold;
            plan.residual_max_degree = std::max(top_degree, 0);
            break;
        }
        plan.stationary.push_back({top, m, top_degree});
        arena -= g.closed_neighborhood(top);
    }
    plan.residual = std::move(arena);
    return plan;
}

Lemma2Strategy::Lemma2Strategy(const Graph& g, VertexSet arena)
    : g_(&g), arena_(std::move(arena)), dist_(distance_matrix(g)) {
    if (arena_.capacity() != g.order()) throw PreconditionError("arena does not match the graph");
}

Vertex Lemma2Strategy::step_towards(Vertex from, Vertex target) const {
    auto gap = [&](Vertex v) { return std::max(0, distance(v, target) - 1); };
    Vertex best = from;
    for (Vertex w : g_->neighbors(from))
        if (gap(w) < gap(best)) best = w;
    return best;
}

namespace {

// Augmenting-path matching of targets to cops; allowed(c, t) is an edge.
template <class Allowed>
std::vector<int> match_targets(std::size_t cops, const std::vector<Vertex>& targets, Allowed allowed) {
    std::vector<int> cop_of(targets.size(), -1);
    std::vector<int> target_of(cops, -1);
    std::vector<bool> seen;
    auto augment = [&](auto&& self, std::size_t t) -> bool {
        for (std::size_t c = 0; c < cops; ++c) {
            if (seen[c] || !allowed(c, targets[t])) continue;
            seen[c] = true;
            if (target_of[c] < 0 || self(self, static_cast<std::size_t>(target_of[c]))) {
                target_of[c] = static_cast<int>(t);
                cop_of[t] = static_cast<int>(c);
                return true;
            }
        }
        return false;
    };
    for (std::size_t t = 0; t < targets.size(); ++t) {
        seen.assign(cops, false);
        augment(augment, t);
    }
    return cop_of;
}

std::optional<std::size_t> capturing_cop(const Graph& g, std::span<const Vertex> cops, Vertex robber) {
    for (std::size_t i = 0; i < cops.size(); ++i)
        if (cops[i] == robber || g.adjacent(cops[i], robber)) return i;
    return std::nullopt;
}

}  // namespace

std::vector<Vertex> Lemma2Strategy::move(std::span<const Vertex> cops, Vertex robber) const {
    if (!arena_.contains(robber)) throw PreconditionError("robber is outside the arena");
    std::vector<Vertex> next(cops.begin(), cops.end());
    if (auto i = capturing_cop(*g_, cops, robber)) {
        next[*i] = robber;
        return next;
    }
    std::vector<Vertex> targets;
    for (Vertex t : g_->neighbors(robber))
        if (arena_.contains(t)) targets.push_back(t);
    if (targets.size() > cops.size())
        throw PreconditionError("robber has " + std::to_string(targets.size()) + " arena neighbours but only " +
                                std::to_string(cops.size()) + " cops chase");
    if (targets.empty()) {
        for (auto& c : next) c = step_towards(c, robber);
        return next;
    }

    auto cop_of = match_targets(cops.size(), targets, [&](std::size_t c, Vertex t) { return distance(cops[c], t) <= 1; });
    if (std::all_of(cop_of.begin(), cop_of.end(), [](int c) { return c >= 0; })) {
        next[static_cast<std::size_t>(cop_of[0])] = targets[0];
        return next;
    }

    std::vector<bool> busy(cops.size(), false);
    std::vector<bool> covered(targets.size(), false);
    for (std::size_t t = 0; t < targets.size(); ++t)
        if (cop_of[t] >= 0) {
            busy[static_cast<std::size_t>(cop_of[t])] = true;
            covered[t] = true;
        }
    std::vector<std::tuple<int, std::size_t, std::size_t>> pairs;
    for (std::size_t c = 0; c < cops.size(); ++c)
        for (std::size_t t = 0; t < targets.size(); ++t)
            if (!busy[c] && !covered[t]) pairs.emplace_back(std::max(0, distance(cops[c], targets[t]) - 1), c, t);
    std::sort(pairs.begin(), pairs.end());
    for (auto [gap, c, t] : pairs) {
        if (busy[c] || covered[t]) continue;
        busy[c] = covered[t] = true;
        next[c] = step_towards(cops[c], targets[t]);
    }
    for (std::size_t c = 0; c < cops.size(); ++c)
        if (!busy[c]) next[c] = step_towards(cops[c], robber);
    return next;
}

std::vector<Vertex> lemma2_move(const Graph& g, const VertexSet& arena, std::span<const Vertex> cops, Vertex robber) {
    return Lemma2Strategy(g, arena).move(cops, robber);
}

PlanStrategy::PlanStrategy(const Graph& g, CopPlan plan) : g_(&g), plan_(std::move(plan)), chase_(g, plan_.residual) {}

std::vector<Vertex> PlanStrategy::initial() const {
    std::vector<Vertex> cops;
    for (const auto& s : plan_.stationary) cops.push_back(s.vertex);
    const Vertex start = plan_.stationary.empty() ? 0 : plan_.stationary.front().vertex;
    cops.insert(cops.end(), static_cast<std::size_t>(plan_.mobile_cops), start);
    return cops;
}

std::vector<Vertex> PlanStrategy::move(std::span<const Vertex> cops, Vertex robber) const {
    std::vector<Vertex> next(cops.begin(), cops.end());
    if (auto i = capturing_cop(*g_, cops, robber)) {
        next[*i] = robber;
        return next;
    }
    const std::size_t parked = plan_.stationary.size();
    if (plan_.mobile_cops > 0 && plan_.residual.contains(robber)) {
        auto mobile = chase_.move(cops.subspan(parked), robber);
        std::copy(mobile.begin(), mobile.end(), next.begin() + static_cast<std::ptrdiff_t>(parked));
    }
    return next;
}

std::string policy_name(RobberPolicy p) {
    switch (p) {
    case RobberPolicy::optimal: return "optimal";
    case RobberPolicy::greedy_distance: return "greedy";
    case RobberPolicy::adversarial: return "adversarial";
    }
    return "?";
}

RobberPolicy policy_from_name(std::string_view name) {
    for (auto p : {RobberPolicy::optimal, RobberPolicy::greedy_distance, RobberPolicy::adversarial})
        if (policy_name(p) == name) return p;
    throw PreconditionError("unknown robber policy '" + std::string(name) + "'");
}

std::string format_trace(const StrategyTrace& trace) {
    std::ostringstream out;
    for (const auto& r : trace.rounds) {
        out << "round=" << r.round << " cops=";
        for (std::size_t i = 0; i < r.cops.size(); ++i) out << (i ? "," : "") << r.cops[i];
        out << " robber=" << r.robber << '\n';
    }
    if (trace.captured) {
        out << "outcome=captured round=" << trace.capture_round << " cap=" << trace.round_cap << '\n';
    } else {
        out << "outcome=survived cap=" << trace.round_cap << '\n';
    }
    return out.str();
}

namespace {

int parse_int(std::string_view text, std::size_t offset) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
        throw ParseError("expected an integer, got '" + std::string(text) + "'", offset);
    return value;
}

// Splits "key=value" fields; checks the keys in order.
std::vector<std::string_view> fields(std::string_view line, std::initializer_list<std::string_view> keys,
                                     std::size_t offset) {
    std::vector<std::string_view> values;
    std::size_t pos = 0;
    for (auto key : keys) {
        while (pos < line.size() && line[pos] == ' ') ++pos;
        auto end = line.find(' ', pos);
        if (end == std::string_view::npos) end = line.size();
        auto field = line.substr(pos, end - pos);
        if (field.size() <= key.size() || field.substr(0, key.size()) != key || field[key.size()] != '=')
            throw ParseError("expected field '" + std::string(key) + "='", offset + pos);
        values.push_back(field.substr(key.size() + 1));
        pos = end;
    }
    while (pos < line.size() && line[pos] == ' ') ++pos;
    if (pos != line.size()) throw ParseError("unexpected trailing field", offset + pos);
    return values;
}

}  // namespace

StrategyTrace parse_trace(std::string_view text) {
    StrategyTrace trace;
    std::size_t pos = 0;
    bool done = false;
    while (pos < text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        auto line = text.substr(pos, end - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        const std::size_t at = pos;
        pos = end + 1;
        if (line.empty()) continue;
        if (done) throw ParseError("content after the outcome line", at);
        if (line.starts_with("outcome=captured")) {
            auto v = fields(line, {"outcome", "round", "cap"}, at);
            trace.captured = true;
            trace.capture_round = parse_int(v[1], at);
            trace.round_cap = parse_int(v[2], at);
            done = true;
        } else if (line.starts_with("outcome=survived")) {
            auto v = fields(line, {"outcome", "cap"}, at);
            trace.round_cap = parse_int(v[1], at);
            done = true;
        } else {
            auto v = fields(line, {"round", "cops", "robber"}, at);
            TraceRound r;
            r.round = parse_int(v[0], at);
            for (std::size_t p = 0; p <= v[1].size();) {
                auto comma = v[1].find(',', p);
                if (comma == std::string_view::npos) comma = v[1].size();
                r.cops.push_back(parse_int(v[1].substr(p, comma - p), at));
                p = comma + 1;
            }
            r.robber = parse_int(v[2], at);
            if (r.round != static_cast<int>(trace.rounds.size())) throw ParseError("rounds out of sequence", at);
            trace.rounds.push_back(std::move(r));
        }
    }
    if (!done) throw ParseError("missing outcome line", text.size());
    return trace;
}

std::optional<std::string> check_trace(const Graph& g, const StrategyTrace& trace) {
    auto legal = [&](Vertex a, Vertex b) { return a == b || g.adjacent(a, b); };
    auto in_range = [&](Vertex v) { return v >= 0 && v < g.order(); };
    if (trace.rounds.empty()) return "trace has no placement";
    const std::size_t k = trace.rounds.front().cops.size();
    std::optional<int> first_capture;
    for (std::size_t i = 0; i < trace.rounds.size(); ++i) {
        const auto& r = trace.rounds[i];
        std::string where = "round " + std::to_string(r.round) + ": ";
        if (r.round != static_cast<int>(i)) return where + "out of sequence";
        if (r.cops.size() != k) return where + "cop count changed";
        if (!in_range(r.robber) || !std::all_of(r.cops.begin(), r.cops.end(), in_range)) return where + "vertex out of range";
        if (i > 0) {
            const auto& prev = trace.rounds[i - 1];
            for (std::size_t c = 0; c < k; ++c)
                if (!legal(prev.cops[c], r.cops[c])) return where + "cop " + std::to_string(c) + " jumped";
            if (!legal(prev.robber, r.robber)) return where + "robber jumped";
        }
        if (std::find(r.cops.begin(), r.cops.end(), r.robber) != r.cops.end()) {
            first_capture = r.round;
            if (i + 1 != trace.rounds.size()) return where + "play continued after a capture";
        }
    }
    if (trace.captured != first_capture.has_value()) return std::string("outcome does not match the rounds");
    if (trace.captured && trace.capture_round != *first_capture) return std::string("capture round is wrong");
    if (!trace.captured && static_cast<int>(trace.rounds.size()) != trace.round_cap + 1)
        return std::string("survived trace does not reach the cap");
    return std::nullopt;
}

namespace {

constexpr int kForever = INT_MAX;

// Exact values of the robber-versus-plan game: value(cops, robber) is the
// number of further cop rounds until capture when the robber delays
// optimally, kForever if he escapes.
class Adversary {
public:
    Adversary(const PlanStrategy& strategy, std::uint64_t budget) : g_(strategy.graph()) {
        auto start = strategy.initial();
        for (Vertex r = 0; r < g_.order(); ++r)
            if (std::find(start.begin(), start.end(), r) == start.end()) id_of(start, r, budget);
        // breadth-first discovery of every reachable cops-to-move state
        for (std::size_t s = 0; s < states_.size(); ++s) {
            auto [cops, robber] = states_[s];
            auto next = strategy.move(cops, robber);
            std::vector<std::size_t> succ;
            if (std::find(next.begin(), next.end(), robber) == next.end()) {
                for (Vertex r : options(robber))
                    if (std::find(next.begin(), next.end(), r) == next.end()) succ.push_back(id_of(next, r, budget));
            }
            successors_.push_back(std::move(succ));
        }
        solve();
    }

    int value(const std::vector<Vertex>& cops, Vertex robber) const {
        auto it = ids_.find(key(cops, robber));
        if (it == ids_.end()) throw std::logic_error("state outside the explored game");
        return value_[it->second];
    }

    std::vector<Vertex> options(Vertex r) const {
        std::vector<Vertex> out{r};
        for (Vertex w : g_.neighbors(r)) out.push_back(w);
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    static std::vector<Vertex> key(const std::vector<Vertex>& cops, Vertex robber) {
        std::vector<Vertex> k = cops;
        k.push_back(robber);
        return k;
    }

    std::size_t id_of(const std::vector<Vertex>& cops, Vertex robber, std::uint64_t budget) {
        auto [it, fresh] = ids_.try_emplace(key(cops, robber), states_.size());
        if (fresh) {
            if (states_.size() >= budget)
                throw ResourceError("strategy game exceeds the state budget of " + std::to_string(budget), budget);
            states_.emplace_back(cops, robber);
        }
        return it->second;
    }

    void solve() {
        const std::size_t count = states_.size();
        std::vector<std::vector<std::size_t>> preds(count);
        std::vector<std::size_t> pending(count);
        std::deque<std::size_t> ready;
        for (std::size_t s = 0; s < count; ++s) {
            pending[s] = successors_[s].size();
            for (auto t : successors_[s]) preds[t].push_back(s);
            if (pending[s] == 0) ready.push_back(s);
        }
        value_.assign(count, kForever);
        while (!ready.empty()) {
            auto s = ready.front();
            ready.pop_front();
            int worst = 0;
            for (auto t : successors_[s]) worst = std::max(worst, value_[t]);
            value_[s] = 1 + worst;
            for (auto p : preds[s])
                if (--pending[p] == 0) ready.push_back(p);
        }
    }

    const Graph& g_;
    std::map<std::vector<Vertex>, std::size_t> ids_;
    std::vector<std::pair<std::vector<Vertex>, Vertex>> states_;
    std::vector<std::vector<std::size_t>> successors_;
    std::vector<int> value_;
};

std::vector<Vertex> sorted(std::vector<Vertex> v) {
    std::sort(v.begin(), v.end());
    return v;
}

bool occupied(const std::vector<Vertex>& cops, Vertex r) { return std::find(cops.begin(), cops.end(), r) != cops.end(); }

}  // namespace

StrategyTrace simulate(const Graph& g, const CopPlan& plan, RobberPolicy policy, int max_rounds) {
    PlanStrategy strategy(g, plan);
    const int cap = max_rounds > 0 ? max_rounds : 4 * g.order();
    const auto dist = distance_matrix(g);

    std::optional<SolveResult> solved;
    std::optional<Adversary> adversary;
    if (policy == RobberPolicy::optimal) {
        GameConfig config;
        config.cops = std::max(1, plan.total_cops());
        solved = cops_win(g, config);
    } else if (policy == RobberPolicy::adversarial) {
        adversary.emplace(strategy, kDefaultStrategyStateBudget);
    }

    auto greedy = [&](const std::vector<Vertex>& cops, const std::vector<Vertex>& candidates) {
        Vertex best = candidates.front();
        int best_gap = -1;
        for (Vertex v : candidates) {
            int gap = INT_MAX;
            for (Vertex c : cops) gap = std::min(gap, dist[static_cast<std::size_t>(c)][static_cast<std::size_t>(v)]);
            if (gap > best_gap) {
                best_gap = gap;
                best = v;
            }
        }
        return best;
    };
    // Adversarial choice among candidate vertices that avoid the cops.
    auto delaying = [&](const std::vector<Vertex>& cops, const std::vector<Vertex>& candidates) {
        Vertex best = -1;
        int best_value = -1;
        for (Vertex v : candidates) {
            if (occupied(cops, v)) continue;
            int value = adversary->value(cops, v);
            if (value > best_value) {
                best_value = value;
                best = v;
            }
        }
        return best >= 0 ? best : candidates.front();
    };

    StrategyTrace trace;
    trace.round_cap = cap;
    std::vector<Vertex> cops = strategy.initial();
    std::vector<Vertex> everywhere;
    for (Vertex v = 0; v < g.order(); ++v) everywhere.push_back(v);
    Vertex robber = 0;
    switch (policy) {
    case RobberPolicy::optimal: robber = solved->robber_placement(CopPosition(sorted(cops))); break;
    case RobberPolicy::greedy_distance: robber = greedy(cops, everywhere); break;
    case RobberPolicy::adversarial: robber = delaying(cops, everywhere); break;
    }
    trace.rounds.push_back({0, cops, robber});
    if (occupied(cops, robber)) {
        trace.captured = true;
        return trace;
    }
    for (int round = 1; round <= cap; ++round) {
        cops = strategy.move(cops, robber);
        if (!occupied(cops, robber)) {
            std::vector<Vertex> options{robber};
            for (Vertex w : g.neighbors(robber)) options.push_back(w);
            std::sort(options.begin(), options.end());
            switch (policy) {
            case RobberPolicy::optimal:
                robber = optimal_robber_move({CopPosition(sorted(cops)), robber, Turn::robber}, *solved);
                break;
            case RobberPolicy::greedy_distance: robber = greedy(cops, options); break;
            case RobberPolicy::adversarial: robber = delaying(cops, options); break;
            }
        }
        trace.rounds.push_back({round, cops, robber});
        if (occupied(cops, robber)) {
            trace.captured = true;
            trace.capture_round = round;
            return trace;
        }
    }
    return trace;
}

std::optional<int> adversarial_capture_bound(const Graph& g, const CopPlan& plan, std::uint64_t state_budget) {
    PlanStrategy strategy(g, plan);
    Adversary adversary(strategy, state_budget);
    auto start = strategy.initial();
    int worst = 0;
    for (Vertex r = 0; r < g.order(); ++r)
        if (!occupied(start, r)) worst = std::max(worst, adversary.value(start, r));
    if (worst == kForever) return std::nullopt;
    return worst;
}

std::vector<std::uint64_t> verify_key_inequality(std::uint64_t m_max) {
    if (m_max < 4) throw PreconditionError("m_max must be at least 4");
    std::vector<std::uint64_t> violations;
    for (std::uint64_t m = 4; m <= m_max; ++m) {
        const std::uint64_t root = isqrt(2 * m);
        const std::uint64_t rest = m >= root + 2 ? m - root - 2 : 0;
        if (1 + isqrt(2 * rest) > root) violations.push_back(m);
    }
    return violations;
}

}  // namespace copnum
