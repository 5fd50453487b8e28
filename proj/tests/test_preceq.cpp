#include "doctest.h"

#include "copnum/enumerate.hpp"
#include "copnum/errors.hpp"
#include "copnum/families.hpp"
#include "copnum/graph6.hpp"
#include "copnum/numeric.hpp"
#include "copnum/preceq.hpp"
#include "copnum/solver.hpp"

using namespace copnum;

TEST_CASE("stage 0 is cop occupancy") {
    Graph g = generate({Family::petersen});
    auto rel = preceq(g, 2, 0);
    for (std::size_t id = 0; id < rel.index().count(); ++id) {
        auto p = rel.index().position(id);
        for (Vertex x = 0; x < 10; ++x) CHECK(rel.contains(x, p) == p.occupies(x));
    }
}

TEST_CASE("complete graphs: one cop relates everything at stage 1") {
    for (int n = 2; n <= 6; ++n) {
        auto rel = preceq(generate({Family::complete, n}), 1, 1);
        CHECK(rel.pair_count(1) == static_cast<std::size_t>(n * n));
    }
}

TEST_CASE("Petersen: stage 1 grows past occupancy at three cops, not two") {
    Graph g = generate({Family::petersen});
    CHECK(preceq(g, 3, 1).pair_count(1) > preceq(g, 3, 1).pair_count(0));
    CHECK(preceq(g, 2, 1).pair_count(1) == preceq(g, 2, 1).pair_count(0));
    CHECK(preceq_fixpoint_wins(g, 3));
    CHECK_FALSE(preceq_fixpoint_wins(g, 2));
}

TEST_CASE("chain is monotone and stabilises") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& g : connected_graphs_up_to_isomorphism(n))
            for (int k = 1; k <= 2; ++k) {
                auto rel = preceq(g, k, std::nullopt);
                CHECK(rel.stable());
                auto sizes = rel.chain_sizes();
                for (std::size_t i = 1; i < sizes.size(); ++i) CHECK(sizes[i] > sizes[i - 1]);
                // a fixed stage agrees with the stable chain up to that stage
                auto partial = preceq(g, k, 1);
                CHECK(partial.pair_count(1) == rel.pair_count(std::min(1, rel.depth())));
            }
}

TEST_CASE("fixpoint decides the no-pass game") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& g : connected_graphs_up_to_isomorphism(n))
            for (int k = 1; k <= 2; ++k) {
                GameConfig c;
                c.cops = k;
                c.robber_may_pass = false;
                CAPTURE(emit_graph6(g));
                CAPTURE(k);
                CHECK(preceq_fixpoint_wins(g, k) == cops_win(g, c).cops_win());
            }
    GameConfig c;
    c.robber_may_pass = false;
    Graph c4 = generate({Family::cycle, 4});
    CHECK(preceq_fixpoint_wins(c4, 1) == cops_win(c4, c).cops_win());
    CHECK(preceq_fixpoint_wins(generate({Family::complete, 5}), 1));
}

TEST_CASE("membership matches the solver's robber-to-move win region") {
    for (int n = 2; n <= 6; ++n)
        for (const auto& g : connected_graphs_up_to_isomorphism(n))
            for (int k = 1; k <= 2; ++k) {
                auto rel = preceq(g, k, std::nullopt);
                GameConfig c;
                c.cops = k;
                c.robber_may_pass = false;
                auto result = cops_win(g, c);
                for (std::size_t id = 0; id < rel.index().count(); ++id) {
                    auto p = rel.index().position(id);
                    for (Vertex x = 0; x < n; ++x)
                        REQUIRE(rel.contains(x, p) == result.is_cop_win({p, x, Turn::robber}));
                }
            }
}

TEST_CASE("preceq errors") {
    Graph g = generate({Family::hoffman_singleton});
    CHECK_THROWS_AS(preceq(g, 7, 1), ResourceError);
    CHECK_THROWS_AS(preceq(g, 0, 1), PreconditionError);
    auto rel = preceq(generate({Family::cycle, 5}), 1, 1);
    CHECK_THROWS_AS(rel.stage(5, CopPosition({0})), PreconditionError);
    CHECK_THROWS_AS(rel.stage(0, CopPosition({0, 1})), PreconditionError);
}
