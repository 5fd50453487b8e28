#include "doctest.h"

#include <map>
#include <set>

#include "copnum/algorithms.hpp"
#include "copnum/enumerate.hpp"
#include "copnum/errors.hpp"
#include "copnum/families.hpp"
#include "copnum/graph6.hpp"
#include "oracles.hpp"

using namespace copnum;

TEST_CASE("labelled connected enumeration counts") {
    auto count = [](int n) {
        std::uint64_t c = 0;
        for_each_connected_graph(n, [&](const Graph&) { ++c; });
        return c;
    };
    CHECK(count(1) == 1);
    CHECK(count(2) == 1);
    CHECK(count(3) == 4);
    CHECK(count(4) == 38);
    for (int n = 1; n <= 6; ++n) CHECK(count(n) == oracle::labelled_connected_count(n));
    CHECK(count_connected_labelled(7) == oracle::labelled_connected_count(7));
    CHECK_THROWS_AS(for_each_connected_graph(9, [](const Graph&) {}), PreconditionError);
    CHECK_THROWS_AS(for_each_connected_graph(0, [](const Graph&) {}), PreconditionError);
}

TEST_CASE("labelled enumeration yields distinct connected graphs and honours the filter") {
    std::set<std::string> seen;
    int filtered = 0;
    for_each_connected_graph(
        5,
        [&](const Graph& g) {
            CHECK(is_connected(g));
            CHECK(g.edge_count() >= 5);
            CHECK(seen.insert(emit_graph6(g)).second);
            ++filtered;
        },
        [](const Graph& g) { return g.edge_count() >= 5; });
    CHECK(filtered > 0);
    CHECK(filtered < 728);
}

TEST_CASE("canonical form is an isomorphism invariant") {
    Graph pet = generate({Family::petersen});
    std::vector<int> perm = {3, 7, 0, 9, 1, 4, 8, 2, 6, 5};
    Graph relabelled(10);
    for (auto e : pet.edges()) relabelled.add_edge(perm[e.u], perm[e.v]);
    CHECK(canonical_form(pet) == canonical_form(relabelled));
    CHECK(oracle::isomorphic(canonical_form(pet), pet));
    CHECK(canonical_graph6(generate({Family::cycle, 5})) == canonical_graph6(parse_graph6("DUW")));
}

TEST_CASE("isomorphism classes") {
    // OEIS A000088 / A001349
    const std::vector<std::size_t> all = {1, 2, 4, 11, 34, 156, 1044, 12346};
    const std::vector<std::size_t> connected = {1, 1, 2, 6, 21, 112, 853, 11117};
    for (int n = 1; n <= 8; ++n) {
        CAPTURE(n);
        CHECK(graphs_up_to_isomorphism(n).size() == all[static_cast<std::size_t>(n - 1)]);
        CHECK(connected_graphs_up_to_isomorphism(n).size() == connected[static_cast<std::size_t>(n - 1)]);
    }

    SUBCASE("orbit sizes add up to the labelled count, so no class is missing") {
        for (int n = 1; n <= 6; ++n) {
            std::uint64_t factorial = 1;
            for (int i = 2; i <= n; ++i) factorial *= static_cast<std::uint64_t>(i);
            std::uint64_t labelled = 0;
            for (const auto& g : connected_graphs_up_to_isomorphism(n)) labelled += factorial / oracle::automorphism_count(g);
            CHECK(labelled == oracle::labelled_connected_count(n));
        }
    }

    SUBCASE("representatives are canonical and pairwise non-isomorphic") {
        auto reps = connected_graphs_up_to_isomorphism(5);
        for (std::size_t i = 0; i < reps.size(); ++i) {
            CHECK(canonical_form(reps[i]) == reps[i]);
            for (std::size_t j = i + 1; j < reps.size(); ++j) CHECK_FALSE(oracle::isomorphic(reps[i], reps[j]));
        }
    }

    SUBCASE("canonical strings of the labelled stream collapse to the classes") {
        std::set<std::string> classes;
        for_each_connected_graph(6, [&](const Graph& g) { classes.insert(canonical_graph6(g)); });
        std::set<std::string> reps;
        for (const auto& g : connected_graphs_up_to_isomorphism(6)) reps.insert(emit_graph6(g));
        CHECK(classes == reps);
    }
}
