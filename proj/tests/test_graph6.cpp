#include "doctest.h"

#include <random>

#include "copnum/errors.hpp"
#include "copnum/families.hpp"
#include "copnum/graph6.hpp"

using namespace copnum;

namespace {

// Independent decoder written straight from the format description:
// N(n) = n + 63, then the upper triangle column by column, six bits per byte.
std::vector<Edge> decode_by_hand(const std::string& s) {
    int n = s[0] - 63;
    std::vector<int> bits;
    for (std::size_t i = 1; i < s.size(); ++i)
        for (int b = 5; b >= 0; --b) bits.push_back(((s[i] - 63) >> b) & 1);
    std::vector<Edge> edges;
    std::size_t k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if (bits[k]) edges.push_back({i, j});
    return edges;
}

}  // namespace

TEST_CASE("graph6 known encodings") {
    Graph k1 = parse_graph6("@");
    CHECK(k1.order() == 1);
    CHECK(k1.edge_count() == 0);

    Graph k2 = parse_graph6("A_");
    CHECK(k2.order() == 2);
    CHECK(k2.adjacent(0, 1));

    Graph empty5 = parse_graph6("D??");
    CHECK(empty5.order() == 5);
    CHECK(empty5.edge_count() == 0);

    CHECK(emit_graph6(Graph(1)) == "@");
    CHECK(emit_graph6(generate({Family::complete, 2})) == "A_");
    CHECK(emit_graph6(Graph(5)) == "D??");
    // Well-known encodings: K_4 and the Petersen graph in its Kneser labelling.
    CHECK(emit_graph6(generate({Family::complete, 4})) == "C~");
}

TEST_CASE("graph6 header, newline and long-order forms") {
    CHECK(parse_graph6(">>graph6<<A_\n") == generate({Family::complete, 2}));
    Graph big = generate({Family::cycle, 70});
    std::string line = emit_graph6(big);
    CHECK(line[0] == 126);
    CHECK(parse_graph6(line, 100) == big);
    CHECK_THROWS_AS(parse_graph6(line), ParseError);  // default cap 64
}

TEST_CASE("graph6 errors name the byte offset") {
    auto offset_of = [](std::string_view s) -> long {
        try {
            parse_graph6(s);
        } catch (const ParseError& e) {
            return static_cast<long>(e.offset());
        }
        return -1;
    };
    CHECK(offset_of("") == 0);
    CHECK(offset_of("D?") == 2);       // truncated adjacency section
    CHECK(offset_of("A ") == 1);       // byte outside 63..126
    CHECK(offset_of("A`") == 1);       // nonzero padding
    CHECK(offset_of("A_?") == 2);      // trailing data
    CHECK(offset_of("?") == 0);        // zero vertices
    CHECK(offset_of("~~??????") == 0); // order beyond the supported range
}

TEST_CASE("graph6 agrees with the hand decoder and round-trips") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + trial % 20;
        std::bernoulli_distribution edge(0.4);
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (edge(rng)) g.add_edge(u, v);
        std::string s = emit_graph6(g);
        CHECK(Graph::from_edges(n, decode_by_hand(s)) == g);
        CHECK(parse_graph6(s) == g);
        CHECK(emit_graph6(parse_graph6(s)) == s);
    }
}

TEST_CASE("graph6 round-trips every generator output") {
    std::vector<GraphFamily> fams = {{Family::petersen}, {Family::hoffman_singleton}, {Family::cycle, 9},
                                     {Family::path, 3},  {Family::complete, 8}};
    for (int q : {2, 3, 5, 7, 11, 13}) {
        fams.push_back({Family::polarity, q});
        fams.push_back({Family::incidence, q});
    }
    for (const auto& f : fams) {
        Graph g = generate(f);
        std::string s = emit_graph6(g);
        Graph back = parse_graph6(s, 1000);
        CHECK(back == g);
        CHECK(emit_graph6(back) == s);
    }
}
