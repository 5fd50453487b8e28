#include "copnum/hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>
#include <sstream>

#include "copnum/errors.hpp"

namespace copnum {

Hypergraph::Hypergraph(int order) : order_(order) {
    if (order < 0) throw PreconditionError("negative hypergraph order");
}

Hypergraph::Hypergraph(int order, std::vector<std::vector<int>> edges) : Hypergraph(order) {
    for (auto& e : edges) add_edge(std::move(e));
}

void Hypergraph::add_edge(std::vector<int> edge) {
    if (edge.empty()) throw PreconditionError("empty hyperedge");
    std::sort(edge.begin(), edge.end());
    if (edge.front() < 0 || edge.back() >= order_) throw PreconditionError("hyperedge vertex out of range");
    if (std::adjacent_find(edge.begin(), edge.end()) != edge.end()) throw PreconditionError("repeated vertex in hyperedge");
    edges_.push_back(std::move(edge));
}

std::optional<int> Hypergraph::uniformity() const {
    if (edges_.empty()) return std::nullopt;
    const auto k = edges_.front().size();
    for (const auto& e : edges_)
        if (e.size() != k) return std::nullopt;
    return static_cast<int>(k);
}

namespace {

class Reader {
public:
    explicit Reader(std::string_view text) : text_(text) {}

    bool at_end() {
        skip_blank_lines();
        return pos_ == text_.size();
    }

    // Integers on the current line; consumes the line.
    std::vector<long long> line(std::size_t& start) {
        skip_blank_lines();
        start = pos_;
        std::vector<long long> out;
        while (pos_ < text_.size() && text_[pos_] != '\n') {
            char c = text_[pos_];
            if (c == ' ' || c == '\t' || c == '\r') {
                ++pos_;
                continue;
            }
            long long value = 0;
            auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
            if (ec != std::errc()) throw ParseError("expected an integer", pos_);
            pos_ = static_cast<std::size_t>(ptr - text_.data());
            out.push_back(value);
        }
        return out;
    }

private:
    void skip_blank_lines() {
        std::size_t p = pos_;
        while (p < text_.size()) {
            char c = text_[p];
            if (c == '\n') {
                pos_ = p + 1;
            } else if (c != ' ' && c != '\t' && c != '\r') {
                return;
            }
            ++p;
        }
        pos_ = text_.size();
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Hypergraph parse_hypergraph(std::string_view text) {
    Reader in(text);
    std::size_t at = 0;
    if (in.at_end()) throw ParseError("missing header line", 0);
    auto header = in.line(at);
    if (header.size() != 2 || header[0] < 0 || header[1] < 0 || header[0] > 1'000'000 || header[1] > 1'000'000)
        throw ParseError("header must be \"n m\"", at);
    Hypergraph h(static_cast<int>(header[0]));
    for (long long i = 0; i < header[1]; ++i) {
        if (in.at_end()) throw ParseError("expected " + std::to_string(header[1]) + " edges", text.size());
        auto values = in.line(at);
        std::vector<int> edge;
        for (auto v : values) {
            if (v < 0 || v >= header[0]) throw ParseError("vertex out of range", at);
            edge.push_back(static_cast<int>(v));
        }
        try {
            h.add_edge(std::move(edge));
        } catch (const PreconditionError& e) {
            throw ParseError(e.what(), at);
        }
    }
    if (!in.at_end()) throw ParseError("trailing content after the last edge", text.size());
    return h;
}

std::string format_hypergraph(const Hypergraph& h) {
    std::ostringstream out;
    out << h.order() << ' ' << h.edge_count() << '\n';
    for (const auto& e : h.edges()) {
        for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
        out << '\n';
    }
    return out.str();
}

namespace {

class TransversalSearch {
public:
    TransversalSearch(std::vector<std::uint64_t> masks, std::vector<std::uint64_t> conflicts, std::uint64_t all)
        : masks_(std::move(masks)), conflicts_(std::move(conflicts)), all_(all), excluded_(masks_.size(), false) {}

    std::vector<std::size_t> run(std::vector<std::size_t> incumbent) {
        best_ = std::move(incumbent);
        search(all_);
        return best_;
    }

private:
    // Size of a greedy family of pairwise disjoint uncovered edges.
    int packing(std::uint64_t uncovered) const {
        int count = 0;
        std::uint64_t blocked = 0;
        for (std::uint64_t rest = uncovered; rest; rest &= rest - 1) {
            int e = std::countr_zero(rest);
            if ((blocked >> e) & 1U) continue;
            ++count;
            blocked |= conflicts_[static_cast<std::size_t>(e)];
        }
        return count;
    }

    void search(std::uint64_t uncovered) {
        if (uncovered == 0) {
            if (chosen_.size() < best_.size()) best_ = chosen_;
            return;
        }
        if (chosen_.size() + static_cast<std::size_t>(packing(uncovered)) >= best_.size()) return;
        std::uint64_t coverable = 0;
        std::size_t pick = masks_.size();
        int pick_degree = 0;
        for (std::size_t v = 0; v < masks_.size(); ++v) {
            if (excluded_[v]) continue;
            coverable |= masks_[v];
            int d = std::popcount(masks_[v] & uncovered);
            if (d > pick_degree) {
                pick_degree = d;
                pick = v;
            }
        }
        if ((uncovered & ~coverable) != 0) return;
        chosen_.push_back(pick);
        search(uncovered & ~masks_[pick]);
        chosen_.pop_back();
        excluded_[pick] = true;
        search(uncovered);
        excluded_[pick] = false;
    }

    std::vector<std::uint64_t> masks_;
    std::vector<std::uint64_t> conflicts_;
    std::uint64_t all_;
    std::vector<bool> excluded_;
    std::vector<std::size_t> chosen_;
    std::vector<std::size_t> best_;
};

}  // namespace

Transversal min_transversal(const Hypergraph& h) {
    const std::size_t m = h.edge_count();
    if (m > kMaxTransversalEdges)
        throw ResourceError("transversal search is limited to " + std::to_string(kMaxTransversalEdges) + " edges",
                            kMaxTransversalEdges);
    if (m == 0) return {};

    std::vector<std::uint64_t> incidence(static_cast<std::size_t>(h.order()), 0);
    for (std::size_t e = 0; e < m; ++e)
        for (int v : h.edges()[e]) incidence[static_cast<std::size_t>(v)] |= std::uint64_t{1} << e;

    // Keep one representative per incidence pattern and drop vertices whose
    // edges are a subset of another vertex's edges.
    std::vector<int> kept;
    std::vector<std::uint64_t> masks;
    for (int v = 0; v < h.order(); ++v) {
        const auto mv = incidence[static_cast<std::size_t>(v)];
        if (mv == 0) continue;
        bool dominated = false;
        for (int w = 0; w < h.order() && !dominated; ++w) {
            const auto mw = incidence[static_cast<std::size_t>(w)];
            if (w == v || (mv & ~mw) != 0) continue;
            dominated = mv != mw || w < v;
        }
        if (dominated) continue;
        kept.push_back(v);
        masks.push_back(mv);
    }

    std::vector<std::uint64_t> conflicts(m, 0);
    for (std::uint64_t mask : masks)
        for (std::uint64_t rest = mask; rest; rest &= rest - 1)
            conflicts[static_cast<std::size_t>(std::countr_zero(rest))] |= mask;

    const std::uint64_t all = m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;

    std::vector<std::size_t> greedy;
    for (std::uint64_t uncovered = all; uncovered;) {
        std::size_t pick = 0;
        for (std::size_t v = 1; v < masks.size(); ++v)
            if (std::popcount(masks[v] & uncovered) > std::popcount(masks[pick] & uncovered)) pick = v;
        greedy.push_back(pick);
        uncovered &= ~masks[pick];
    }

    auto best = TransversalSearch(masks, conflicts, all).run(greedy);
    Transversal t;
    t.size = static_cast<int>(best.size());
    for (auto i : best) t.vertices.push_back(kept[i]);
    std::sort(t.vertices.begin(), t.vertices.end());
    return t;
}

Rational Rational::of(std::int64_t num, std::int64_t den) {
    if (den <= 0 || num < 0) throw PreconditionError("rational must be nonnegative with a positive denominator");
    auto g = std::gcd(num, den);
    return {num / g, den / g};
}

std::string Rational::str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

Rational chvatal_bound(const Hypergraph& h) {
    auto k = h.uniformity();
    if (!k) throw PreconditionError("bound needs a uniform hypergraph with at least one edge");
    const auto m = static_cast<std::int64_t>(h.edge_count());
    return Rational::of((*k / 2) * m + h.order(), (3 * *k) / 2);
}

Hypergraph random_uniform_hypergraph(int n, int m, int k, std::mt19937_64& rng) {
    if (k < 1 || k > n || m < 0) throw PreconditionError("need 1 <= k <= n and m >= 0");
    Hypergraph h(n);
    std::vector<int> vertices(static_cast<std::size_t>(n));
    for (int i = 0; i < m; ++i) {
        std::iota(vertices.begin(), vertices.end(), 0);
        // partial Fisher-Yates with explicit draws keeps the stream portable
        for (int j = 0; j < k; ++j) {
            auto r = j + static_cast<int>(rng() % static_cast<std::uint64_t>(n - j));
            std::swap(vertices[static_cast<std::size_t>(j)], vertices[static_cast<std::size_t>(r)]);
        }
        h.add_edge({vertices.begin(), vertices.begin() + k});
    }
    return h;
}

}  // namespace copnum
