#include "doctest.h"

#include <bit>
#include <cmath>
#include <numeric>
#include <random>

#include "copnum/enumerate.hpp"
#include "copnum/errors.hpp"
#include "copnum/families.hpp"
#include "copnum/graph6.hpp"
#include "copnum/hypergraph.hpp"
#include "copnum/numeric.hpp"
#include "copnum/traps.hpp"
#include "oracles.hpp"

using namespace copnum;

namespace {

Hypergraph fano() {
    return Hypergraph(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
}

bool hits_all(const Hypergraph& h, const std::vector<int>& set) {
    for (const auto& e : h.edges())
        if (std::none_of(e.begin(), e.end(), [&](int v) { return std::find(set.begin(), set.end(), v) != set.end(); }))
            return false;
    return true;
}

// Fewest cops off v controlling N(v), by trying every vertex subset.
int brute_threshold(const Graph& g, Vertex v) {
    const int n = g.order();
    int best = n;
    for (std::uint32_t s = 0; s < (1U << n); ++s) {
        if ((s >> v) & 1U) continue;
        int size = std::popcount(s);
        if (size >= best) continue;
        bool ok = true;
        for (Vertex u : g.neighbors(v)) {
            bool controlled = (s >> u) & 1U;
            for (Vertex w : g.neighbors(u)) controlled = controlled || ((s >> w) & 1U);
            ok = ok && controlled;
        }
        if (ok) best = size;
    }
    return best;
}

}  // namespace

TEST_CASE("min_transversal on small instances") {
    CHECK(min_transversal(Hypergraph(2, {{0}, {1}})).size == 2);
    CHECK(min_transversal(Hypergraph(3, {{0, 1, 2}})).size == 1);
    CHECK(min_transversal(Hypergraph(5)).size == 0);
    auto t = min_transversal(fano());
    CHECK(t.size == 3);
    CHECK(hits_all(fano(), t.vertices));
    CHECK(oracle::min_hitting_set_size(7, fano().edges()) == 3);
}

TEST_CASE("min_transversal matches exhaustive search") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 400; ++trial) {
        int n = 1 + static_cast<int>(rng() % (trial < 40 ? 20 : 14));
        int k = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(std::min(n, 6)));
        int m = static_cast<int>(rng() % 16);
        // mixed edge sizes: start uniform, then trim some edges
        Hypergraph base = random_uniform_hypergraph(n, m, k, rng);
        Hypergraph h(n);
        for (auto e : base.edges()) {
            if (e.size() > 1 && rng() % 3 == 0) e.pop_back();
            h.add_edge(e);
        }
        auto t = min_transversal(h);
        CAPTURE(format_hypergraph(h));
        CHECK(hits_all(h, t.vertices));
        CHECK(static_cast<int>(t.vertices.size()) == t.size);
        CHECK(t.size == oracle::min_hitting_set_size(n, h.edges()));
    }
}

TEST_CASE("chvatal bound") {
    auto two = chvatal_bound(Hypergraph(4, {{0, 1}, {2, 3}}));
    CHECK(two == Rational{2, 1});
    CHECK(min_transversal(Hypergraph(4, {{0, 1}, {2, 3}})).size == 2);
    auto f = chvatal_bound(fano());
    CHECK(f == Rational{7, 2});
    CHECK(f.str() == "7/2");
    CHECK(3 <= f);
    for (int k = 1; k <= 8; ++k) {
        std::vector<int> edge(static_cast<std::size_t>(k));
        std::iota(edge.begin(), edge.end(), 0);
        auto b = chvatal_bound(Hypergraph(k, {edge}));
        CHECK(1 <= b);
        if (k % 2 == 0) CHECK(b == Rational{1, 1});
    }
    CHECK_THROWS_AS(chvatal_bound(Hypergraph(3, {{0}, {1, 2}})), PreconditionError);
    CHECK_THROWS_AS(chvatal_bound(Hypergraph(3)), PreconditionError);
}

TEST_CASE("chvatal bound holds on random uniform hypergraphs") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        int k = 2 + static_cast<int>(rng() % 4);
        int n = k + static_cast<int>(rng() % static_cast<std::uint64_t>(16 - k));
        int m = 1 + static_cast<int>(rng() % 12);
        auto h = random_uniform_hypergraph(n, m, k, rng);
        CHECK(min_transversal(h).size <= chvatal_bound(h));
    }
}

TEST_CASE("random hypergraphs are reproducible") {
    std::mt19937_64 a(7), b(7);
    CHECK(random_uniform_hypergraph(12, 9, 4, a) == random_uniform_hypergraph(12, 9, 4, b));
}

TEST_CASE("hypergraph text format") {
    auto h = parse_hypergraph("7 7\n0 1 2\n0 3 4\n0 5 6\n1 3 5\n1 4 6\n2 3 6\n2 4 5\n");
    CHECK(h == fano());
    CHECK(parse_hypergraph(format_hypergraph(h)) == h);
    CHECK(parse_hypergraph("3 0\n").edge_count() == 0);
    CHECK(parse_hypergraph("\n3 1\r\n\n2 0\n\n").edges()[0] == std::vector<int>{0, 2});
    CHECK_THROWS_AS(parse_hypergraph(""), ParseError);
    CHECK_THROWS_AS(parse_hypergraph("3\n"), ParseError);
    CHECK_THROWS_AS(parse_hypergraph("3 2\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_hypergraph("3 1\n0 3\n"), ParseError);
    CHECK_THROWS_AS(parse_hypergraph("3 1\n0 0\n"), ParseError);
    CHECK_THROWS_AS(parse_hypergraph("3 1\n0 x\n"), ParseError);
    CHECK_THROWS_AS(parse_hypergraph("3 1\n0 1\n2\n"), ParseError);
    try {
        parse_hypergraph("3 1\n0 x\n");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 6);
    }
    std::vector<std::vector<int>> many(65, std::vector<int>{0});
    CHECK_THROWS_AS(min_transversal(Hypergraph(1, many)), ResourceError);
}

TEST_CASE("trap thresholds on named graphs") {
    for (int n = 2; n <= 6; ++n) {
        Graph k = generate({Family::complete, n});
        for (Vertex v = 0; v < n; ++v) CHECK(trap_threshold(k, v) == 1);
    }
    CHECK(trap_threshold(Graph(1), 0) == 0);
    Graph c5 = generate({Family::cycle, 5});
    for (Vertex v = 0; v < 5; ++v) CHECK(trap_threshold(c5, v) == 2);
    Graph pet = generate({Family::petersen});
    for (Vertex v = 0; v < 10; ++v) {
        CHECK(trap_threshold(pet, v) == 3);
        CHECK(is_s_trap(pet, v, std::sqrt(10.0)));
        CHECK_FALSE(is_s_trap(pet, v, std::sqrt(10.0) - 1));
    }
    CHECK(is_s_trap(generate({Family::complete, 2}), 0, 1.0));
    CHECK(count_alpha_traps(generate({Family::complete, 5}), std::sqrt(5.0)) == 5);
    CHECK(count_alpha_traps(pet, 3.0) == 10);
    CHECK_THROWS_AS(count_alpha_traps(pet, 2.0, true), PreconditionError);
    CHECK_THROWS_AS(count_alpha_traps(pet, 11.0, true), PreconditionError);
    CHECK(count_alpha_traps(pet, 2.0) == 0);
    CHECK_THROWS_AS(trap_threshold(pet, 10), PreconditionError);

    auto placement = trap_placement(pet, 0);
    CHECK(std::find(placement.vertices.begin(), placement.vertices.end(), 0) == placement.vertices.end());
}

TEST_CASE("Hoffman-Singleton thresholds equal the degree") {
    Graph hs = generate({Family::hoffman_singleton});
    auto report = trap_report(hs);
    for (int t : report.thresholds) CHECK(t == 7);
    CHECK(check_lemma4(report));
    CHECK(report.min_threshold() == static_cast<int>(isqrt(50)));
}

TEST_CASE("thresholds match brute force and stay within the degree") {
    for (int n = 1; n <= 7; ++n)
        for (const auto& g : connected_graphs_up_to_isomorphism(n))
            for (Vertex v = 0; v < n; ++v) {
                int t = trap_threshold(g, v);
                CHECK(t == brute_threshold(g, v));
                CHECK(t <= g.degree(v));
            }
}

TEST_CASE("every vertex is an n-trap") {
    for (int n = 1; n <= 7; ++n)
        for (const auto& g : connected_graphs_up_to_isomorphism(n)) CHECK(count_alpha_traps(g, n) == n);
}

TEST_CASE("trap existence and trap counts on small graphs") {
    CHECK(check_lemma4(Graph(1)));
    for (int n = 1; n <= 7; ++n)
        for (const auto& g : connected_graphs_up_to_isomorphism(n)) {
            auto report = trap_report(g);
            CHECK(check_lemma4(report));
            for (const auto& row : check_lemma5(report)) {
                CAPTURE(emit_graph6(g));
                CAPTURE(row.alpha);
                CHECK(row.holds);
                CHECK(row.holds == (row.count > lemma5_bound(n, row.alpha) + 1e-9));
            }
        }
}

TEST_CASE("exact trap-count bound at boundaries") {
    // d = count + 1 - alpha, s = n - alpha
    CHECK(lemma5_holds(3, 5, 3));        // d = 1
    CHECK_FALSE(lemma5_holds(2, 3, 3));  // d = 0, s = 0: 2 > 2 fails
    CHECK(lemma5_holds(2, 4, 3));        // d = 0, s = 1
    CHECK_FALSE(lemma5_holds(1, 4, 3));  // d = -1, s = 1: 1 > 3 - 1 - 1 fails
    CHECK(lemma5_holds(1, 5, 3));        // d = -1, s = 2: 1 > 2 - sqrt 2
    CHECK_FALSE(lemma5_holds(0, 7, 3));  // d = -2, s = 4: 0 > 0 fails
    CHECK(lemma5_holds(0, 8, 3));        // d = -2, s = 5
}
