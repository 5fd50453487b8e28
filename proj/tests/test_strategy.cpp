#include "doctest.h"

#include <fstream>
#include <sstream>

#include "copnum/algorithms.hpp"
#include "copnum/enumerate.hpp"
#include "copnum/errors.hpp"
#include "copnum/families.hpp"
#include "copnum/graph6.hpp"
#include "copnum/numeric.hpp"
#include "copnum/strategy.hpp"

using namespace copnum;

namespace {

std::string slurp(const std::string& name) {
    std::ifstream in(std::string(COPNUM_GOLDEN_DIR) + "/" + name);
    REQUIRE(in);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

int floor_sqrt_2(int n) { return static_cast<int>(isqrt(2 * static_cast<std::uint64_t>(n))); }

bool diameter_at_most_2(const Graph& g) { return diameter(g).value_or(3) <= 2; }

}  // namespace

TEST_CASE("plans for named graphs") {
    for (int n = 4; n <= 9; ++n) {
        auto plan = build_theorem1_plan(generate({Family::complete, n}));
        CHECK(plan.stationary.size() == 1);
        CHECK(plan.stationary[0].vertex == 0);
        CHECK(plan.residual.empty());
        CHECK(plan.mobile_cops == 0);
        CHECK(plan.total_cops() == 1);
    }
    // K_3: degree 2 does not exceed floor(sqrt 6) = 2
    CHECK(build_theorem1_plan(generate({Family::complete, 3})).stationary.empty());

    auto pet = build_theorem1_plan(generate({Family::petersen}));
    CHECK(pet.stationary.empty());
    CHECK(pet.mobile_cops == 4);
    CHECK(pet.budget == 4);
    auto c5 = build_theorem1_plan(generate({Family::cycle, 5}));
    CHECK(c5.stationary.empty());
    CHECK(c5.mobile_cops == 3);

    CHECK_THROWS_AS(build_theorem1_plan(generate({Family::cycle, 7})), PreconditionError);
    CHECK_NOTHROW(build_theorem1_plan(generate({Family::cycle, 6})));
    CHECK_THROWS_AS(build_theorem1_plan(generate({Family::path, 5})), PreconditionError);
    CHECK_NOTHROW(build_theorem1_plan(generate({Family::incidence, 2})));
    Graph split(4);
    split.add_edge(0, 1);
    split.add_edge(2, 3);
    CHECK_THROWS_AS(build_theorem1_plan(split), PreconditionError);
}

TEST_CASE("plan invariants over small diameter-2 graphs and the families") {
    std::vector<Graph> graphs;
    for (int n = 1; n <= 7; ++n)
        for (const auto& g : connected_graphs_up_to_isomorphism(n))
            if (diameter_at_most_2(g)) graphs.push_back(g);
    for (int q : {2, 3, 5, 7}) graphs.push_back(generate({Family::polarity, q}));
    for (int q : {2, 3, 5}) graphs.push_back(generate({Family::incidence, q}));
    graphs.push_back(generate({Family::hoffman_singleton}));
    for (const auto& g : graphs) {
        auto plan = build_theorem1_plan(g);
        CAPTURE(emit_graph6(g));
        CHECK(plan.total_cops() <= floor_sqrt_2(g.order()));
        CHECK(plan.residual_max_degree <= floor_sqrt_2(plan.residual.size()));
        CHECK(plan.mobile_cops == floor_sqrt_2(plan.residual.size()));
        int m = g.order();
        for (const auto& s : plan.stationary) {
            CHECK(s.arena_order == m);
            CHECK(s.degree > floor_sqrt_2(m));
            m -= s.degree + 1;  // stage removes exactly N_H[v]
            CHECK(s.arena_order - m >= floor_sqrt_2(s.arena_order) + 2);
        }
        CHECK(m == plan.residual.size());
    }
}

TEST_CASE("arena chase moves") {
    Graph c5 = generate({Family::cycle, 5});
    VertexSet all = VertexSet::full(5);
    SUBCASE("adjacent cop captures") {
        auto next = lemma2_move(c5, all, std::vector<Vertex>{3, 1}, 2);
        CHECK(next == std::vector<Vertex>{2, 1});
    }
    SUBCASE("robber with no arena neighbours") {
        VertexSet lone(5);
        lone.insert(0);
        auto next = lemma2_move(c5, lone, std::vector<Vertex>{2}, 0);
        CHECK(next.size() == 1);
        CHECK(c5.adjacent(next[0], 0));
    }
    SUBCASE("full cover steps next to the robber") {
        // robber at 0, targets 1 and 4; cop 0 on 2 covers 1, cop 1 on 3 covers 4
        auto next = lemma2_move(c5, all, std::vector<Vertex>{2, 3}, 0);
        CHECK(next == std::vector<Vertex>{1, 3});
    }
    SUBCASE("too few cops") {
        CHECK_THROWS_AS(lemma2_move(c5, all, std::vector<Vertex>{2}, 0), PreconditionError);
    }
    SUBCASE("two cops catch a robber on C5 inside C5") {
        Lemma2Strategy chase(c5, all);
        for (Vertex start = 0; start < 5; ++start) {
            std::vector<Vertex> cops{0, 0};
            Vertex r = start == 0 ? 2 : start;
            bool caught = false;
            for (int round = 0; round < 10 && !caught; ++round) {
                cops = chase.move(cops, r);
                caught = std::find(cops.begin(), cops.end(), r) != cops.end();
                if (caught) break;
                // robber flees to the option farthest from the cops
                Vertex best = r;
                int best_gap = -1;
                for (Vertex v : {r, (r + 1) % 5, (r + 4) % 5}) {
                    int gap = std::min(chase.distance(cops[0], v), chase.distance(cops[1], v));
                    if (gap > best_gap) {
                        best_gap = gap;
                        best = v;
                    }
                }
                r = best;
                caught = std::find(cops.begin(), cops.end(), r) != cops.end();
            }
            CHECK(caught);
        }
    }
}

TEST_CASE("simulation captures and the adversary bound agrees") {
    for (int n = 1; n <= 7; ++n)
        for (const auto& g : connected_graphs_up_to_isomorphism(n)) {
            if (!diameter_at_most_2(g)) continue;
            auto plan = build_theorem1_plan(g);
            CAPTURE(emit_graph6(g));
            auto bound = adversarial_capture_bound(g, plan);
            REQUIRE(bound.has_value());
            CHECK(*bound <= 4 * n);
            for (auto policy : {RobberPolicy::optimal, RobberPolicy::greedy_distance, RobberPolicy::adversarial}) {
                auto trace = simulate(g, plan, policy);
                CHECK(trace.captured);
                CHECK(trace.capture_round <= *bound);
                CHECK_FALSE(check_trace(g, trace).has_value());
                if (policy == RobberPolicy::adversarial) CHECK(trace.capture_round == *bound);
            }
        }
}

TEST_CASE("stationary cops punish entry into their neighbourhoods") {
    int checked = 0;
    for (int n = 4; n <= 7; ++n)
        for (const auto& g : connected_graphs_up_to_isomorphism(n)) {
            if (!diameter_at_most_2(g)) continue;
            auto plan = build_theorem1_plan(g);
            if (plan.stationary.empty()) continue;
            for (auto policy : {RobberPolicy::optimal, RobberPolicy::greedy_distance, RobberPolicy::adversarial}) {
                auto trace = simulate(g, plan, policy);
                for (std::size_t i = 0; i + 1 < trace.rounds.size(); ++i) {
                    Vertex r = trace.rounds[i].robber;
                    bool guarded = false;
                    for (const auto& s : plan.stationary) guarded = guarded || g.closed_neighborhood(s.vertex).contains(r);
                    if (guarded) {
                        CHECK(trace.captured);
                        CHECK(trace.capture_round == static_cast<int>(i) + 1);
                        ++checked;
                    }
                }
            }
        }
    CHECK(checked > 0);
}

TEST_CASE("Heawood graph with five cops") {
    Graph h = generate({Family::incidence, 2});
    REQUIRE(h.order() == 14);
    auto plan = build_theorem1_plan(h);
    CHECK(plan.total_cops() == 5);
    for (auto policy : {RobberPolicy::optimal, RobberPolicy::greedy_distance, RobberPolicy::adversarial}) {
        auto trace = simulate(h, plan, policy);
        CHECK(trace.captured);
        CHECK_FALSE(check_trace(h, trace).has_value());
    }
    CHECK(adversarial_capture_bound(h, plan).has_value());
}

TEST_CASE("complete graphs are caught at once") {
    for (int n = 1; n <= 8; ++n) {
        Graph k = generate({Family::complete, n});
        auto plan = build_theorem1_plan(k);
        for (auto policy : {RobberPolicy::optimal, RobberPolicy::greedy_distance, RobberPolicy::adversarial})
            CHECK(simulate(k, plan, policy).capture_round <= 1);
    }
}

TEST_CASE("a plan with too few cops can fail") {
    // C4 is not diameter 2, so build the plan by hand: one mobile cop.
    Graph c4 = generate({Family::cycle, 4});
    CopPlan plan;
    plan.residual = VertexSet::full(4);
    plan.residual_max_degree = 2;
    plan.mobile_cops = 2;
    plan.budget = 2;
    CHECK(simulate(c4, plan, RobberPolicy::adversarial).captured);
    plan.mobile_cops = 1;
    CHECK_THROWS_AS(simulate(c4, plan, RobberPolicy::greedy_distance), PreconditionError);
}

TEST_CASE("golden traces") {
    auto check_golden = [](const Graph& g, RobberPolicy policy, const std::string& file) {
        auto text = format_trace(simulate(g, build_theorem1_plan(g), policy));
        CHECK(text == slurp(file));
        auto parsed = parse_trace(text);
        CHECK(format_trace(parsed) == text);
        CHECK_FALSE(check_trace(g, parsed).has_value());
    };
    check_golden(generate({Family::petersen}), RobberPolicy::optimal, "petersen_optimal.trace");
    check_golden(generate({Family::cycle, 5}), RobberPolicy::greedy_distance, "c5_greedy.trace");
    check_golden(generate({Family::incidence, 2}), RobberPolicy::adversarial, "heawood_adversarial.trace");
}

TEST_CASE("trace parsing and checking") {
    const std::string good = "round=0 cops=0 robber=2\nround=1 cops=1 robber=2\nround=2 cops=2 robber=2\noutcome=captured round=2 cap=20\n";
    auto t = parse_trace(good);
    CHECK(t.rounds.size() == 3);
    CHECK(t.captured);
    CHECK(t.round_cap == 20);
    Graph p3 = generate({Family::path, 3});
    CHECK_FALSE(check_trace(p3, t).has_value());

    auto jump = parse_trace("round=0 cops=0 robber=2\nround=1 cops=2 robber=2\noutcome=captured round=1 cap=5\n");
    CHECK(check_trace(p3, jump).has_value());
    auto wrong = parse_trace("round=0 cops=0 robber=2\nround=1 cops=1 robber=2\noutcome=captured round=1 cap=5\n");
    CHECK(check_trace(p3, wrong).has_value());
    auto survived = parse_trace("round=0 cops=0 robber=2\nround=1 cops=0 robber=2\noutcome=survived cap=1\n");
    CHECK_FALSE(check_trace(p3, survived).has_value());
    CHECK_FALSE(survived.captured);

    CHECK_THROWS_AS(parse_trace("round=0 cops=0 robber=2\n"), ParseError);
    CHECK_THROWS_AS(parse_trace("round=1 cops=0 robber=2\noutcome=survived cap=0\n"), ParseError);
    CHECK_THROWS_AS(parse_trace("round=0 cops=0,x robber=2\noutcome=survived cap=0\n"), ParseError);
    CHECK_THROWS_AS(parse_trace("round=0 robber=2\noutcome=survived cap=0\n"), ParseError);
    CHECK_THROWS_AS(parse_trace("outcome=survived cap=0\nround=0 cops=0 robber=2\n"), ParseError);
    CHECK_THROWS_AS(policy_from_name("lazy"), PreconditionError);
    CHECK(policy_from_name("greedy") == RobberPolicy::greedy_distance);
}

TEST_CASE("key inequality") {
    // m = 4: 1 + isqrt(0) = 1 <= isqrt(8) = 2; m = 5: 1 <= 3
    CHECK(verify_key_inequality(4).empty());
    CHECK(verify_key_inequality(5).empty());
    CHECK(verify_key_inequality(1'000'000).empty());
    CHECK_THROWS_AS(verify_key_inequality(3), PreconditionError);
    // the inequality is tight somewhere: equality occurs
    int equal = 0;
    for (std::uint64_t m = 4; m <= 1000; ++m) {
        auto root = isqrt(2 * m);
        if (1 + isqrt(2 * (m - root - 2)) == root) ++equal;
    }
    CHECK(equal > 0);
}
