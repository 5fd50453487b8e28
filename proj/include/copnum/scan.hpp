#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "copnum/graph.hpp"
#include "copnum/solver.hpp"

namespace copnum {

enum class Check {
    theorem1,       ///< c <= floor(sqrt(2n)) on diameter <= 2 or bipartite diameter 3
    arenas,         ///< c_G(m) <= floor(sqrt(2m)) for every m, same graphs
    strategy,       ///< the peeling plan captures every robber within 4n rounds
    lemma4,         ///< a floor(sqrt n)-trap exists
    lemma5,         ///< alpha-trap counts exceed alpha - sqrt(n - alpha) - 1
    cor_teleport,   ///< c_T <= floor(sqrt n) and c_T <= c
    conj_sqrt_n,    ///< report-only: c <= floor(sqrt n) on diameter <= 2
    conj_teleport,  ///< report-only c = c_T on diameter <= 2; c_T <= floor(sqrt n) asserted
    preceq_equiv,   ///< fixpoint vs no-pass solver, first stage vs traps
    dismantle,      ///< c = 1 exactly for dismantlable graphs
};

std::string_view check_name(Check c);
std::optional<Check> check_from_name(std::string_view name);
std::vector<Check> all_checks();
bool is_conjecture(Check c);
/// Largest order a built-in enumeration scan accepts for the check.
int max_scan_order(Check c);
/// Graphs a check applies to; the rest are filtered out of a scan.
bool applies(Check c, const Graph& g);

enum class Verdict { pass, fail, report_only, unresolved };
std::string_view verdict_name(Verdict v);

struct ScanOptions {
    CopNumberOptions solver;
    std::optional<double> timeout_seconds;  ///< per graph
    int jobs = 1;
    bool timing = false;
};

struct ScanRecord {
    std::size_t index = 0;  ///< position in the input
    std::string graph6;
    int n = 0;
    std::optional<int> diameter;  ///< nullopt when disconnected
    bool bipartite = false;
    std::optional<CopNumber> c;
    std::optional<CopNumber> c_teleport;
    int bound = 0;
    Verdict verdict = Verdict::pass;
    bool candidate = false;  ///< conjecture counterexample candidate
    std::string detail;
    std::optional<double> millis;
};

ScanRecord scan_graph(Check check, const Graph& g, const ScanOptions& options, std::size_t index = 0);

struct ScanSummary {
    std::size_t graphs = 0;    ///< inputs seen
    std::size_t filtered = 0;  ///< inputs the check does not apply to
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t report_only = 0;
    std::size_t unresolved = 0;
    std::size_t candidates = 0;

    void add(const ScanRecord& r);
    /// 1 on any violation, else 3 when something was unresolved, else 0.
    int exit_code() const;
};

/// Scans the graphs that the check applies to, on up to options.jobs
/// threads. Records come back in input order.
std::vector<ScanRecord> run_scan(Check check, std::span<const Graph> graphs, const ScanOptions& options,
                                 ScanSummary& summary);

/// Random k-uniform hypergraphs checked against the Chvatal-McDiarmid
/// bound: k in [2,5], n in [k,15], m in [1,12].
struct HypergraphRecord {
    std::size_t index = 0;
    int n = 0;
    int m = 0;
    int k = 0;
    int tau = 0;
    std::string bound;  ///< exact fraction
    bool holds = true;
};

std::vector<HypergraphRecord> run_chvatal_scan(std::uint64_t seed, std::size_t count);

}  // namespace copnum
