// copnum: command-line front end for the solver, scans, generators and traps.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "copnum/algorithms.hpp"
#include "copnum/enumerate.hpp"
#include "copnum/errors.hpp"
#include "copnum/families.hpp"
#include "copnum/graph6.hpp"
#include "copnum/numeric.hpp"
#include "copnum/report.hpp"
#include "copnum/scan.hpp"
#include "copnum/solver.hpp"
#include "copnum/strategy.hpp"
#include "copnum/traps.hpp"

using namespace copnum;

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct Common {
    std::string input = "-";
    std::string variant = "standard";
    bool no_pass_robber = false;
    int max_k = 0;
    std::uint64_t budget = kDefaultStateBudget;
    bool json = false;
    bool allow_disconnected = false;
    double timeout = 0;
};

struct InputLine {
    std::size_t index = 0;
    std::string text;
    std::optional<Graph> graph;
    std::string error;
};

// Reads graph6 lines, skipping blank ones. Bad lines keep their error.
std::vector<InputLine> read_graphs(const std::string& path) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (path != "-") {
        file.open(path);
        if (!file) throw std::runtime_error("cannot open " + path);
        in = &file;
    }
    std::vector<InputLine> out;
    std::string line;
    std::size_t index = 0;
    while (std::getline(*in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        InputLine item;
        item.index = index++;
        item.text = line;
        try {
            item.graph = parse_graph6(line);
        } catch (const ParseError& e) {
            item.error = e.what();
        }
        out.push_back(std::move(item));
    }
    return out;
}

CopNumberOptions solver_options(const Common& c) {
    CopNumberOptions o;
    o.limits.state_budget = c.budget;
    if (c.timeout > 0)
        o.limits.deadline = std::chrono::steady_clock::now() +
                            std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(c.timeout));
    o.allow_disconnected = c.allow_disconnected;
    o.robber_may_pass = !c.no_pass_robber;
    o.max_cops = c.max_k;
    return o;
}

void add_common(CLI::App* cmd, Common& c, bool game_flags) {
    cmd->add_option("--input", c.input, "graph6 file, one graph per line ('-' for stdin)");
    cmd->add_flag("--json", c.json, "one JSON object per line");
    if (!game_flags) return;
    cmd->add_option("--variant", c.variant, "standard or teleport")->check(CLI::IsMember({"standard", "teleport"}));
    cmd->add_flag("--no-pass-robber", c.no_pass_robber, "the robber must move every round");
    cmd->add_option("--max-k", c.max_k, "largest cop count tried (0: n)")->check(CLI::NonNegativeNumber);
    cmd->add_option("--budget", c.budget, "state budget per solve");
    cmd->add_option("--timeout", c.timeout, "seconds per graph (0: none)")->check(CLI::NonNegativeNumber);
    cmd->add_flag("--allow-disconnected", c.allow_disconnected, "sum cop numbers over components");
}

std::string cop_text(const CopNumber& c) { return c.resolved ? std::to_string(c.value) : ">=" + std::to_string(c.value); }

int cmd_solve(const Common& common) {
    auto lines = read_graphs(common.input);
    const bool teleport = common.variant == "teleport";
    std::cout << format_header({{"command", "solve"},
                                {"variant", common.variant},
                                {"robber_pass", common.no_pass_robber ? "0" : "1"},
                                {"budget", std::to_string(common.budget)}},
                               common.json);
    int code = 0;
    for (const auto& item : lines) {
        ReportFields f{{"index", std::to_string(item.index)}, {"graph", item.text}};
        if (!item.graph) {
            f.emplace_back("status", "error");
            f.emplace_back("error", item.error);
            std::cout << format_fields(f, common.json);
            code = std::max(code, kExitUsage);
            continue;
        }
        const Graph& g = *item.graph;
        f.emplace_back("n", std::to_string(g.order()));
        try {
            auto options = solver_options(common);
            auto c = cop_number(g, options);
            f.emplace_back("c", cop_text(c));
            bool resolved = c.resolved;
            if (teleport) {
                auto t = teleport_cop_number(g, options);
                f.emplace_back("c_T", cop_text(t));
                resolved = resolved && t.resolved;
            }
            f.emplace_back("status", resolved ? "resolved" : "unresolved");
            if (!resolved && code == 0) code = kExitResource;
        } catch (const PreconditionError& e) {
            f.emplace_back("status", "error");
            f.emplace_back("error", e.what());
            code = std::max(code, kExitUsage);
        }
        std::cout << format_fields(f, common.json);
    }
    return code;
}

struct ScanArgs {
    std::string check;
    int nmin = 1;
    int nmax = 6;
    std::uint64_t seed = 1;
    std::size_t count = 1000;
    int jobs = 1;
    bool timing = false;
    bool from_file = false;
};

int cmd_scan(const Common& common, const ScanArgs& args) {
    if (args.check == "chvatal") {
        std::cout << format_header({{"command", "scan"},
                                    {"check", "chvatal"},
                                    {"seed", std::to_string(args.seed)},
                                    {"count", std::to_string(args.count)}},
                                   common.json);
        auto records = run_chvatal_scan(args.seed, args.count);
        std::size_t fails = 0;
        for (const auto& r : records) {
            std::cout << format_hypergraph_record(r, common.json);
            if (!r.holds) ++fails;
        }
        std::cout << format_header({{"summary", "chvatal"}, {"hypergraphs", std::to_string(records.size())}, {"fail", std::to_string(fails)}},
                                   common.json, "summary");
        return fails ? kExitViolation : 0;
    }
    auto check = check_from_name(args.check);
    if (!check) throw CLI::ValidationError("--check", "unknown check '" + args.check + "'");

    std::vector<Graph> graphs;
    ReportFields header{{"command", "scan"}, {"check", args.check}};
    if (args.from_file) {
        for (const auto& item : read_graphs(common.input)) {
            if (!item.graph) throw ParseError("line " + std::to_string(item.index) + ": " + item.error, 0);
            graphs.push_back(*item.graph);
        }
        header.emplace_back("source", "file");
    } else {
        const int cap = max_scan_order(*check);
        if (args.nmax > cap || args.nmin < 1 || args.nmin > args.nmax)
            throw CLI::ValidationError("--nmax", "order range must lie in [1, " + std::to_string(cap) + "] for this check");
        for (int n = args.nmin; n <= args.nmax; ++n)
            for (auto& g : connected_graphs_up_to_isomorphism(n)) graphs.push_back(std::move(g));
        header.emplace_back("source", "enumeration");
        header.emplace_back("nmin", std::to_string(args.nmin));
        header.emplace_back("nmax", std::to_string(args.nmax));
    }
    header.emplace_back("seed", std::to_string(args.seed));
    header.emplace_back("robber_pass", common.no_pass_robber ? "0" : "1");
    std::cout << format_header(header, common.json);

    ScanOptions options;
    options.solver = solver_options(common);
    options.solver.limits.deadline.reset();
    if (common.timeout > 0) options.timeout_seconds = common.timeout;
    options.jobs = args.jobs;
    options.timing = args.timing;
    ScanSummary summary;
    for (const auto& r : run_scan(*check, graphs, options, summary)) {
        std::cout << format_record(r, common.json);
        if (r.candidate && !common.json) std::cout << "# candidate index=" << r.index << " graph=" << r.graph6 << '\n';
    }
    std::cout << format_summary(summary, common.json);
    return summary.exit_code();
}

int cmd_gen(const std::string& family, int parameter, bool json) {
    std::vector<Graph> out;
    if (family == "connected") {
        if (parameter < 1 || parameter > kMaxEnumerationOrder)
            throw CLI::ValidationError("parameter", "order must lie in [1, " + std::to_string(kMaxEnumerationOrder) + "]");
        out = connected_graphs_up_to_isomorphism(parameter);
    } else {
        auto f = family_from_name(family);
        if (!f) throw CLI::ValidationError("family", "unknown family '" + family + "'");
        out.push_back(generate({*f, parameter}));
    }
    for (const auto& g : out) {
        if (json) {
            std::cout << nlohmann::ordered_json{{"graph", emit_graph6(g)}, {"n", g.order()}}.dump() << '\n';
        } else {
            std::cout << emit_graph6(g) << '\n';
        }
    }
    return 0;
}

int cmd_trap(const Common& common, std::optional<double> alpha) {
    int code = 0;
    std::cout << format_header({{"command", "trap"}, {"alpha", alpha ? std::to_string(*alpha) : "sqrt(n)"}}, common.json);
    for (const auto& item : read_graphs(common.input)) {
        ReportFields f{{"index", std::to_string(item.index)}, {"graph", item.text}};
        if (!item.graph) {
            f.emplace_back("status", "error");
            f.emplace_back("error", item.error);
            std::cout << format_fields(f, common.json);
            code = std::max(code, kExitUsage);
            continue;
        }
        const Graph& g = *item.graph;
        try {
            auto report = trap_report(g);
            const double a = alpha.value_or(std::sqrt(static_cast<double>(g.order())));
            std::string thresholds;
            for (std::size_t v = 0; v < report.thresholds.size(); ++v)
                thresholds += (v ? "," : "") + std::to_string(report.thresholds[v]);
            char abuf[32];
            std::snprintf(abuf, sizeof abuf, "%.6f", a);
            f.emplace_back("n", std::to_string(g.order()));
            f.emplace_back("alpha", abuf);
            f.emplace_back("thresholds", thresholds);
            f.emplace_back("min_threshold", std::to_string(report.min_threshold()));
            f.emplace_back("alpha_traps", std::to_string(report.count_alpha(a)));
            f.emplace_back("sqrt_n_trap", check_lemma4(report) ? "1" : "0");
            if (!check_lemma4(report)) code = std::max(code, kExitViolation);
        } catch (const ResourceError& e) {
            f.emplace_back("status", "unresolved");
            f.emplace_back("error", e.what());
            if (code == 0) code = kExitResource;
        }
        std::cout << format_fields(f, common.json);
    }
    return code;
}

int cmd_ineq(std::uint64_t m_max, bool json) {
    auto violations = verify_key_inequality(m_max);
    for (auto m : violations) std::cout << format_fields({{"violation", std::to_string(m)}}, json);
    std::cout << format_fields({{"m_max", std::to_string(m_max)}, {"violations", std::to_string(violations.size())}}, json);
    return violations.empty() ? 0 : kExitViolation;
}

int cmd_simulate(const Common& common, const std::string& policy_name_arg, int max_rounds) {
    int code = 0;
    for (const auto& item : read_graphs(common.input)) {
        if (!item.graph) {
            std::cout << format_fields({{"index", std::to_string(item.index)}, {"status", "error"}, {"error", item.error}},
                                       common.json);
            code = std::max(code, kExitUsage);
            continue;
        }
        const Graph& g = *item.graph;
        try {
            auto plan = build_theorem1_plan(g);
            RobberPolicy policy = RobberPolicy::greedy_distance;
            if (policy_name_arg == "auto") {
                if (estimated_state_count(g.order(), std::max(1, plan.total_cops())) <= common.budget)
                    policy = RobberPolicy::optimal;
            } else {
                policy = policy_from_name(policy_name_arg);
            }
            auto trace = simulate(g, plan, policy, max_rounds);
            if (common.json) {
                nlohmann::ordered_json rounds = nlohmann::ordered_json::array();
                for (const auto& r : trace.rounds) rounds.push_back({{"round", r.round}, {"cops", r.cops}, {"robber", r.robber}});
                std::cout << nlohmann::ordered_json{{"index", item.index},
                                                    {"graph", item.text},
                                                    {"policy", policy_name(policy)},
                                                    {"stationary", plan.stationary.size()},
                                                    {"mobile", plan.mobile_cops},
                                                    {"rounds", rounds},
                                                    {"captured", trace.captured},
                                                    {"capture_round", trace.capture_round},
                                                    {"cap", trace.round_cap}}
                                 .dump()
                          << '\n';
            } else {
                std::cout << "# index=" << item.index << " graph=" << item.text << " policy=" << policy_name(policy)
                          << " stationary=" << plan.stationary.size() << " mobile=" << plan.mobile_cops << '\n'
                          << format_trace(trace);
            }
            if (!trace.captured) code = std::max(code, kExitViolation);
        } catch (const PreconditionError& e) {
            std::cout << format_fields({{"index", std::to_string(item.index)}, {"status", "error"}, {"error", e.what()}},
                                       common.json);
            code = std::max(code, kExitUsage);
        } catch (const ResourceError& e) {
            std::cout << format_fields({{"index", std::to_string(item.index)}, {"status", "unresolved"}, {"error", e.what()}},
                                       common.json);
            if (code == 0) code = kExitResource;
        }
    }
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cops and robbers: exact solver, strategy simulator and scan harness"};
    app.require_subcommand(1);

    Common solve_c, scan_c, trap_c, sim_c;
    auto* solve = app.add_subcommand("solve", "cop number of each graph6 line");
    add_common(solve, solve_c, true);

    ScanArgs scan_args;
    auto* scan = app.add_subcommand("scan", "check a statement over a corpus");
    add_common(scan, scan_c, true);
    std::string check_list = "chvatal";
    for (auto c : all_checks()) check_list += ", " + std::string(check_name(c));
    scan->add_option("--check", scan_args.check, "one of: " + check_list)->required();
    scan->add_option("--nmin", scan_args.nmin, "smallest order enumerated");
    scan->add_option("--nmax", scan_args.nmax, "largest order enumerated");
    scan->add_option("--seed", scan_args.seed, "seed for the random hypergraphs of the chvatal check");
    scan->add_option("--count", scan_args.count, "hypergraphs in the chvatal check");
    scan->add_option("--jobs", scan_args.jobs, "worker threads")->check(CLI::PositiveNumber);
    scan->add_flag("--timing", scan_args.timing, "add per-graph milliseconds (output is then not reproducible)");

    std::string family;
    int parameter = 0;
    bool gen_json = false;
    auto* gen = app.add_subcommand("gen", "emit graph6 for a named family, or all connected graphs of an order");
    gen->add_option("family", family, "cycle, path, complete, petersen, hoffman_singleton, polarity, incidence, connected")
        ->required();
    gen->add_option("parameter", parameter, "order, or prime q for polarity and incidence");
    gen->add_flag("--json", gen_json, "one JSON object per line");

    std::optional<double> alpha;
    auto* trap = app.add_subcommand("trap", "trap thresholds per vertex");
    add_common(trap, trap_c, false);
    trap->add_option("--alpha", alpha, "count alpha-traps (default sqrt(n))");

    std::uint64_t m_max = 1'000'000;
    bool ineq_json = false;
    auto* ineq = app.add_subcommand("ineq", "check the peeling inequality for 4 <= m <= m_max");
    ineq->add_option("--m-max", m_max, "largest m")->check(CLI::Range(std::uint64_t{4}, std::uint64_t{1} << 40));
    ineq->add_flag("--json", ineq_json, "one JSON object per line");

    std::string policy = "auto";
    int max_rounds = 0;
    auto* sim = app.add_subcommand("simulate", "play the peeling plan against a robber");
    add_common(sim, sim_c, true);
    sim->add_option("--policy", policy, "optimal, greedy, adversarial or auto")
        ->check(CLI::IsMember({"optimal", "greedy", "adversarial", "auto"}));
    sim->add_option("--max-rounds", max_rounds, "round cap (0: 4n)")->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*solve) return cmd_solve(solve_c);
        if (*scan) {
            scan_args.from_file = scan->count("--input") > 0;
            return cmd_scan(scan_c, scan_args);
        }
        if (*gen) return cmd_gen(family, parameter, gen_json);
        if (*trap) return cmd_trap(trap_c, alpha);
        if (*ineq) return cmd_ineq(m_max, ineq_json);
        if (*sim) return cmd_simulate(sim_c, policy, max_rounds);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ResourceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitResource;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return 0;
}
