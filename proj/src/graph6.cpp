#include "copnum/graph6.hpp"

#include "copnum/errors.hpp"

namespace copnum {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kMaxFormatOrder = 258047;

int sextet(std::string_view s, std::size_t pos) {
    if (pos >= s.size()) throw ParseError("graph6: truncated input", pos);
    auto c = static_cast<unsigned char>(s[pos]);
    if (c < 63 || c > 126) throw ParseError("graph6: byte " + std::to_string(c) + " outside 63..126", pos);
    return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view line, int max_order) {
    std::size_t base = 0;
    if (line.starts_with(kHeader)) base = kHeader.size();
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);

    std::size_t pos = base;
    if (pos >= line.size()) throw ParseError("graph6: empty line", pos);

    long n = 0;
    if (line[pos] == 126) {
        if (pos + 1 < line.size() && line[pos + 1] == 126)
            throw ParseError("graph6: order above " + std::to_string(kMaxFormatOrder) + " not supported", pos);
        for (int i = 1; i <= 3; ++i) n = (n << 6) | sextet(line, pos + static_cast<std::size_t>(i));
        if (n < 63) throw ParseError("graph6: non-canonical long order header", pos);
        pos += 4;
    } else {
        n = sextet(line, pos);
        pos += 1;
    }
    if (n < 1) throw ParseError("graph6: graphs need at least one vertex", base);
    if (n > max_order)
        throw ParseError("graph6: order " + std::to_string(n) + " exceeds cap " + std::to_string(max_order), base);

    const int order = static_cast<int>(n);
    const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (line.size() - pos < bytes) throw ParseError("graph6: truncated adjacency section", line.size());
    if (line.size() - pos > bytes) throw ParseError("graph6: trailing bytes after adjacency section", pos + bytes);

    Graph g(order);
    std::size_t k = 0;
    for (Vertex j = 1; j < order; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            int value = sextet(line, pos + k / 6);
            if ((value >> (5 - k % 6)) & 1) g.add_edge(i, j);
        }
    }
    if (bits % 6 != 0) {
        std::size_t last = pos + bytes - 1;
        int value = sextet(line, last);
        int pad_mask = (1 << (6 - bits % 6)) - 1;
        if (value & pad_mask) throw ParseError("graph6: nonzero padding bits", last);
    }
    return g;
}

std::string emit_graph6(const Graph& g) {
    const int n = g.order();
    if (n > kMaxFormatOrder) throw PreconditionError("graph6 cannot encode order " + std::to_string(n));
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back(static_cast<char>(126));
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }
    int acc = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
    return out;
}

}  // namespace copnum
