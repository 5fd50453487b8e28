#include "doctest.h"

#include "json.hpp"

#include "copnum/enumerate.hpp"
#include "copnum/families.hpp"
#include "copnum/graph6.hpp"
#include "copnum/report.hpp"
#include "copnum/scan.hpp"

using namespace copnum;

namespace {

std::vector<Graph> corpus(int nmax) {
    std::vector<Graph> out;
    for (int n = 1; n <= nmax; ++n)
        for (auto& g : connected_graphs_up_to_isomorphism(n)) out.push_back(std::move(g));
    return out;
}

}  // namespace

TEST_CASE("check names round-trip") {
    for (auto c : all_checks()) CHECK(check_from_name(check_name(c)) == c);
    CHECK_FALSE(check_from_name("chvatal").has_value());
    CHECK(is_conjecture(Check::conj_teleport));
    CHECK_FALSE(is_conjecture(Check::theorem1));
}

TEST_CASE("filters") {
    CHECK(applies(Check::theorem1, generate({Family::petersen})));
    CHECK(applies(Check::theorem1, generate({Family::incidence, 2})));
    CHECK_FALSE(applies(Check::theorem1, generate({Family::cycle, 7})));
    CHECK_FALSE(applies(Check::conj_sqrt_n, generate({Family::incidence, 2})));
    CHECK(applies(Check::lemma4, generate({Family::cycle, 7})));
    Graph split(2);
    CHECK_FALSE(applies(Check::lemma4, split));
}

TEST_CASE("records agree with solving each graph alone") {
    auto graphs = corpus(5);
    ScanOptions options;
    options.jobs = 3;
    ScanSummary summary;
    auto records = run_scan(Check::cor_teleport, graphs, options, summary);
    REQUIRE(records.size() == graphs.size());
    for (const auto& r : records) {
        Graph g = parse_graph6(r.graph6);
        CHECK(r.c == cop_number(g));
        CHECK(r.c_teleport == teleport_cop_number(g));
        CHECK(r.verdict == Verdict::pass);
    }
    CHECK(summary.exit_code() == 0);
}

TEST_CASE("threads do not change the output") {
    auto graphs = corpus(6);
    std::string one, four;
    for (int jobs : {1, 4}) {
        ScanOptions options;
        options.jobs = jobs;
        ScanSummary summary;
        std::string& out = jobs == 1 ? one : four;
        for (const auto& r : run_scan(Check::theorem1, graphs, options, summary)) out += format_record(r, false);
        out += format_summary(summary, false);
    }
    CHECK(one == four);
}

TEST_CASE("conjecture checks never fail on a candidate") {
    // the 4-cycle with one extra vertex on three of its corners: c = 2, c_T = 1
    Graph g = parse_graph6("Dr[");
    auto r = scan_graph(Check::conj_teleport, g, {});
    CHECK(r.verdict == Verdict::report_only);
    CHECK(r.candidate);
    ScanSummary s;
    s.add(r);
    CHECK(s.exit_code() == 0);
    CHECK(s.candidates == 1);
}

TEST_CASE("unresolved and failing summaries") {
    ScanOptions tight;
    tight.solver.limits.state_budget = 50;
    auto r = scan_graph(Check::theorem1, generate({Family::petersen}), tight);
    CHECK(r.verdict == Verdict::unresolved);
    ScanSummary s;
    s.add(r);
    CHECK(s.exit_code() == 3);
    ScanRecord bad;
    bad.verdict = Verdict::fail;
    s.add(bad);
    CHECK(s.exit_code() == 1);
}

TEST_CASE("report lines") {
    auto r = scan_graph(Check::lemma4, generate({Family::petersen}), {}, 7);
    auto text = format_record(r, false);
    CHECK(text == "index=7 graph=" + canonical_graph6(generate({Family::petersen})) +
                      " n=10 diameter=2 bipartite=0 c=- c_T=- bound=3 verdict=pass candidate=0"
                      " detail=min_threshold=3,traps=10\n");
    auto j = nlohmann::json::parse(format_record(r, true));
    CHECK(j["type"] == "record");
    CHECK(j["n"] == 10);
    CHECK(j["c"].is_null());
    CHECK(nlohmann::json::parse(format_summary(ScanSummary{}, true))["type"] == "summary");
    CHECK(nlohmann::json::parse(format_header({{"a", "12"}, {"b", "x"}}, true))["a"] == 12);
    CHECK(format_header({{"a", "12"}, {"b", "x"}}, false) == "# a=12 b=x\n");
}

TEST_CASE("chvatal scan is reproducible and holds") {
    auto a = run_chvatal_scan(11, 50);
    auto b = run_chvatal_scan(11, 50);
    REQUIRE(a.size() == 50);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(format_hypergraph_record(a[i], false) == format_hypergraph_record(b[i], false));
        CHECK(a[i].holds);
        CHECK(a[i].k >= 2);
        CHECK(a[i].k <= 5);
        CHECK(a[i].n <= 15);
        CHECK(a[i].m <= 12);
    }
}
