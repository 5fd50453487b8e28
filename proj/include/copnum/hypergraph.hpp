#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace copnum {

/// Finite hypergraph on vertices 0..n-1. Edges are sorted, nonempty vertex
/// lists; repeated edges are kept (they count towards m).
class Hypergraph {
public:
    explicit Hypergraph(int order);
    Hypergraph(int order, std::vector<std::vector<int>> edges);

    void add_edge(std::vector<int> edge);

    int order() const { return order_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<std::vector<int>>& edges() const { return edges_; }
    /// Common edge size, if all edges have one (nullopt for no edges).
    std::optional<int> uniformity() const;

    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

private:
    int order_;
    std::vector<std::vector<int>> edges_;
};

/// Text form: "n m" on the first line, then one edge per line as
/// space-separated vertex indices.
Hypergraph parse_hypergraph(std::string_view text);
std::string format_hypergraph(const Hypergraph& h);

inline constexpr std::size_t kMaxTransversalEdges = 64;

struct Transversal {
    int size = 0;
    std::vector<int> vertices;  ///< ascending
};

/// Exact minimum vertex set meeting every edge. Branch and bound over
/// include/exclude of a most-covering vertex, with a greedy cover as the
/// first incumbent and a packing of pairwise disjoint edges as lower bound.
/// Throws ResourceError for more than kMaxTransversalEdges edges.
Transversal min_transversal(const Hypergraph& h);

/// Exact nonnegative fraction in lowest terms.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Rational of(std::int64_t num, std::int64_t den);
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const;

    friend bool operator==(const Rational&, const Rational&) = default;
    friend bool operator<=(std::int64_t a, const Rational& r) { return a * r.den <= r.num; }
    friend bool operator<(std::int64_t a, const Rational& r) { return a * r.den < r.num; }
};

/// (floor(k/2) m + n) / floor(3k/2) for a k-uniform hypergraph. Throws
/// PreconditionError when the edges do not share one size.
Rational chvatal_bound(const Hypergraph& h);

/// m edges, each a uniformly random k-subset of n vertices.
Hypergraph random_uniform_hypergraph(int n, int m, int k, std::mt19937_64& rng);

}  // namespace copnum
