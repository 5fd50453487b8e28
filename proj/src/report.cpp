#include "copnum/report.hpp"

#include <cstdio>

#include "json.hpp"

namespace copnum {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string text_line(const ReportFields& fields, const char* prefix) {
    std::string out = prefix;
    for (const auto& [k, v] : fields) {
        if (!out.empty()) out += ' ';
        out += k + "=" + v;
    }
    return out + "\n";
}

std::string cop_value(const std::optional<CopNumber>& c) {
    if (!c) return "-";
    return c->resolved ? std::to_string(c->value) : ">=" + std::to_string(c->value);
}

ordered_json cop_json(const std::optional<CopNumber>& c) {
    if (!c) return nullptr;
    return ordered_json{{"value", c->value}, {"resolved", c->resolved}};
}

std::string ms(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", x);
    return buf;
}

// Integers become JSON numbers; graph6 never consists of digits.
ordered_json value_json(const std::string& v) {
    std::size_t i = v.size() > 1 && v[0] == '-' ? 1 : 0;
    if (i == v.size() || v.size() > 18) return v;
    for (std::size_t j = i; j < v.size(); ++j)
        if (v[j] < '0' || v[j] > '9') return v;
    return std::stoll(v);
}

}  // namespace

std::string format_fields(const ReportFields& fields, bool json) {
    if (!json) return text_line(fields, "");
    ordered_json j;
    for (const auto& [k, v] : fields) j[k] = value_json(v);
    return j.dump() + "\n";
}

std::string format_header(const ReportFields& fields, bool json, std::string_view type) {
    if (!json) return text_line(fields, "#");
    ordered_json j{{"type", type}};
    for (const auto& [k, v] : fields) j[k] = value_json(v);
    return j.dump() + "\n";
}

std::string format_record(const ScanRecord& r, bool json) {
    if (json) {
        ordered_json j{{"type", "record"},
                       {"index", r.index},
                       {"graph", r.graph6},
                       {"n", r.n},
                       {"diameter", r.diameter ? ordered_json(*r.diameter) : ordered_json(nullptr)},
                       {"bipartite", r.bipartite},
                       {"c", cop_json(r.c)},
                       {"c_T", cop_json(r.c_teleport)},
                       {"bound", r.bound},
                       {"verdict", verdict_name(r.verdict)},
                       {"candidate", r.candidate},
                       {"detail", r.detail}};
        if (r.millis) j["ms"] = *r.millis;
        return j.dump() + "\n";
    }
    ReportFields f{{"index", std::to_string(r.index)},
                   {"graph", r.graph6},
                   {"n", std::to_string(r.n)},
                   {"diameter", r.diameter ? std::to_string(*r.diameter) : "inf"},
                   {"bipartite", r.bipartite ? "1" : "0"},
                   {"c", cop_value(r.c)},
                   {"c_T", cop_value(r.c_teleport)},
                   {"bound", std::to_string(r.bound)},
                   {"verdict", std::string(verdict_name(r.verdict))},
                   {"candidate", r.candidate ? "1" : "0"},
                   {"detail", r.detail.empty() ? "-" : r.detail}};
    if (r.millis) f.emplace_back("ms", ms(*r.millis));
    return text_line(f, "");
}

std::string format_summary(const ScanSummary& s, bool json) {
    ReportFields f{{"summary", "scan"},
                   {"graphs", std::to_string(s.graphs)},
                   {"filtered", std::to_string(s.filtered)},
                   {"pass", std::to_string(s.pass)},
                   {"fail", std::to_string(s.fail)},
                   {"report_only", std::to_string(s.report_only)},
                   {"unresolved", std::to_string(s.unresolved)},
                   {"candidates", std::to_string(s.candidates)}};
    if (!json) return text_line(f, "#");
    ordered_json j{{"type", "summary"},
                   {"graphs", s.graphs},
                   {"filtered", s.filtered},
                   {"pass", s.pass},
                   {"fail", s.fail},
                   {"report_only", s.report_only},
                   {"unresolved", s.unresolved},
                   {"candidates", s.candidates}};
    return j.dump() + "\n";
}

std::string format_hypergraph_record(const HypergraphRecord& r, bool json) {
    if (json) {
        ordered_json j{{"type", "record"}, {"index", r.index}, {"n", r.n},     {"m", r.m},
                       {"k", r.k},         {"tau", r.tau},     {"bound", r.bound}, {"verdict", r.holds ? "pass" : "fail"}};
        return j.dump() + "\n";
    }
    return text_line({{"index", std::to_string(r.index)},
                      {"n", std::to_string(r.n)},
                      {"m", std::to_string(r.m)},
                      {"k", std::to_string(r.k)},
                      {"tau", std::to_string(r.tau)},
                      {"bound", r.bound},
                      {"verdict", r.holds ? "pass" : "fail"}},
                     "");
}

}  // namespace copnum
