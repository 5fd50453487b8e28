#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "copnum/scan.hpp"

namespace copnum {

/// Report lines, either "key=value" text with a fixed key order or one JSON
/// object per line. Header and summary lines start with '#' in text mode
/// and carry a "type" key in JSON mode. Every returned string ends in '\n'.
using ReportFields = std::vector<std::pair<std::string, std::string>>;

/// `type` names the JSON line kind ("header", "summary").
std::string format_header(const ReportFields& fields, bool json, std::string_view type = "header");
std::string format_record(const ScanRecord& r, bool json);
std::string format_summary(const ScanSummary& s, bool json);
std::string format_hypergraph_record(const HypergraphRecord& r, bool json);
/// Generic record with the caller's key order.
std::string format_fields(const ReportFields& fields, bool json);

}  // namespace copnum
