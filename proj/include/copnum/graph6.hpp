#pragma once

#include <string>
#include <string_view>

#include "copnum/graph.hpp"

namespace copnum {

/// Default cap on the order accepted by parse_graph6.
inline constexpr int kDefaultMaxOrder = 64;

/// Decodes one graph6 line. A leading ">>graph6<<" header and a trailing
/// newline are accepted. Orders above `max_order` (and anything above the
/// format's 258047 limit) are rejected. Padding bits must be zero, so every
/// accepted line is the canonical encoding of its graph.
/// Throws ParseError naming the offending byte offset.
Graph parse_graph6(std::string_view line, int max_order = kDefaultMaxOrder);

/// Encodes `g` without the optional header. Bit-exact inverse of parse_graph6.
std::string emit_graph6(const Graph& g);

}  // namespace copnum
