#include "copnum/enumerate.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <mutex>
#include <set>
#include <string>

#include "copnum/algorithms.hpp"
#include "copnum/errors.hpp"
#include "copnum/graph6.hpp"

namespace copnum {

namespace {

void require_order(int n, int cap) {
    if (n < 1 || n > cap)
        throw PreconditionError("order " + std::to_string(n) + " outside 1.." + std::to_string(cap));
}

using Rows = std::array<std::uint32_t, kMaxCanonicalOrder>;

bool rows_connected(const Rows& rows, int n) {
    std::uint32_t seen = 1;
    std::uint32_t frontier = 1;
    while (frontier) {
        std::uint32_t next = 0;
        for (std::uint32_t f = frontier; f; f &= f - 1) next |= rows[static_cast<std::size_t>(std::countr_zero(f))];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (n == 32 ? ~0U : (1U << n) - 1);
}

Rows rows_of(const Graph& g) {
    Rows rows{};
    for (Vertex v = 0; v < g.order(); ++v)
        for (Vertex w : g.neighbors(v)) rows[static_cast<std::size_t>(v)] |= 1U << w;
    return rows;
}

Graph graph_of(const Rows& rows, int n) {
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (std::uint32_t r = rows[static_cast<std::size_t>(u)] >> (u + 1); r; r &= r - 1)
            g.add_edge(u, u + 1 + std::countr_zero(r));
    return g;
}

/// Minimum graph6 bit string over colour-class-respecting labellings.
class Canonicaliser {
public:
    Canonicaliser(const Rows& rows, int n) : rows_(rows), n_(n), total_bits_(n * (n - 1) / 2) {
        refine_colours();
    }

    /// Returns the canonical relabelling: perm[i] is the original vertex at position i.
    std::array<int, kMaxCanonicalOrder> run() {
        best_valid_ = false;
        search(0, 0, false);
        return best_perm_;
    }

private:
    void refine_colours() {
        std::array<int, kMaxCanonicalOrder> colour{};
        int classes = 1;
        while (true) {
            std::vector<std::pair<std::vector<int>, int>> sig(static_cast<std::size_t>(n_));
            for (int v = 0; v < n_; ++v) {
                std::vector<int> s{colour[static_cast<std::size_t>(v)]};
                std::vector<int> nb;
                for (std::uint32_t r = rows_[static_cast<std::size_t>(v)]; r; r &= r - 1)
                    nb.push_back(colour[static_cast<std::size_t>(std::countr_zero(r))]);
                std::sort(nb.begin(), nb.end());
                s.insert(s.end(), nb.begin(), nb.end());
                sig[static_cast<std::size_t>(v)] = {std::move(s), v};
            }
            std::vector<std::vector<int>> keys;
            for (auto& [s, v] : sig) keys.push_back(s);
            std::sort(keys.begin(), keys.end());
            keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
            for (auto& [s, v] : sig)
                colour[static_cast<std::size_t>(v)] =
                    static_cast<int>(std::lower_bound(keys.begin(), keys.end(), s) - keys.begin());
            int now = static_cast<int>(keys.size());
            if (now == classes) break;
            classes = now;
        }
        // position t may only hold vertices of cell_of_position_[t]
        std::vector<int> order(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) order[static_cast<std::size_t>(v)] = v;
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return colour[static_cast<std::size_t>(a)] < colour[static_cast<std::size_t>(b)];
        });
        for (int t = 0; t < n_; ++t) cell_of_position_[static_cast<std::size_t>(t)] = colour[static_cast<std::size_t>(order[static_cast<std::size_t>(t)])];
        colour_ = colour;
    }

    void search(int t, std::uint64_t prefix, bool strictly_better) {
        if (t == n_) {
            if (!best_valid_ || prefix < best_code_) {
                best_code_ = prefix;
                best_perm_ = perm_;
                best_valid_ = true;
            }
            return;
        }
        const int bits_before = t * (t - 1) / 2;
        for (int v = 0; v < n_; ++v) {
            if ((used_ >> v) & 1U) continue;
            if (colour_[static_cast<std::size_t>(v)] != cell_of_position_[static_cast<std::size_t>(t)]) continue;
            std::uint64_t code = prefix;
            for (int i = 0; i < t; ++i)
                code = (code << 1) | ((rows_[static_cast<std::size_t>(perm_[static_cast<std::size_t>(i)])] >> v) & 1U);
            bool better = strictly_better;
            if (best_valid_ && !strictly_better) {
                const int bits_now = bits_before + t;
                std::uint64_t best_prefix = bits_now == 0 ? 0 : best_code_ >> (total_bits_ - bits_now);
                if (code > best_prefix) continue;
                better = code < best_prefix;
            }
            perm_[static_cast<std::size_t>(t)] = v;
            used_ |= 1U << v;
            search(t + 1, code, better);
            used_ &= ~(1U << v);
        }
    }

    Rows rows_;
    int n_;
    int total_bits_;
    std::array<int, kMaxCanonicalOrder> colour_{};
    std::array<int, kMaxCanonicalOrder> cell_of_position_{};
    std::array<int, kMaxCanonicalOrder> perm_{};
    std::array<int, kMaxCanonicalOrder> best_perm_{};
    std::uint32_t used_ = 0;
    std::uint64_t best_code_ = 0;
    bool best_valid_ = false;
};

Rows canonical_rows(const Rows& rows, int n) {
    auto perm = Canonicaliser(rows, n).run();
    std::array<int, kMaxCanonicalOrder> where{};
    for (int i = 0; i < n; ++i) where[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = i;
    Rows out{};
    for (int v = 0; v < n; ++v)
        for (std::uint32_t r = rows[static_cast<std::size_t>(v)]; r; r &= r - 1)
            out[static_cast<std::size_t>(where[static_cast<std::size_t>(v)])] |=
                1U << where[static_cast<std::size_t>(std::countr_zero(r))];
    return out;
}

/// graph6 bit string packed MSB-first.
std::uint64_t code_of(const Rows& rows, int n) {
    std::uint64_t code = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) code = (code << 1) | ((rows[static_cast<std::size_t>(i)] >> j) & 1U);
    return code;
}

Rows rows_from_code(std::uint64_t code, int n) {
    Rows rows{};
    int bit = n * (n - 1) / 2 - 1;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, --bit)
            if ((code >> bit) & 1U) {
                rows[static_cast<std::size_t>(i)] |= 1U << j;
                rows[static_cast<std::size_t>(j)] |= 1U << i;
            }
    return rows;
}

}  // namespace

void for_each_connected_graph(int n, const GraphVisitor& visit, const GraphFilter& filter) {
    require_order(n, kMaxEnumerationOrder);
    const int bits = n * (n - 1) / 2;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << bits); ++code) {
        Rows rows = rows_from_code(code, n);
        if (!rows_connected(rows, n)) continue;
        Graph g = graph_of(rows, n);
        if (filter && !filter(g)) continue;
        visit(g);
    }
}

std::uint64_t count_connected_labelled(int n) {
    require_order(n, kMaxEnumerationOrder);
    const int bits = n * (n - 1) / 2;
    std::uint64_t count = 0;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << bits); ++code)
        if (rows_connected(rows_from_code(code, n), n)) ++count;
    return count;
}

Graph canonical_form(const Graph& g) {
    require_order(g.order(), kMaxCanonicalOrder);
    return graph_of(canonical_rows(rows_of(g), g.order()), g.order());
}

std::string canonical_graph6(const Graph& g) { return emit_graph6(canonical_form(g)); }

const std::vector<Graph>& graphs_up_to_isomorphism(int n) {
    require_order(n, kMaxEnumerationOrder);
    static std::mutex mutex;
    static std::map<int, std::vector<Graph>> cache;
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;

    std::vector<std::uint64_t> codes{0};  // K_1
    for (int m = 2; m <= n; ++m) {
        std::set<std::uint64_t> next;
        for (std::uint64_t code : codes) {
            Rows base = rows_from_code(code, m - 1);
            for (std::uint32_t nbrs = 0; nbrs < (1U << (m - 1)); ++nbrs) {
                Rows rows = base;
                rows[static_cast<std::size_t>(m - 1)] = nbrs;
                for (std::uint32_t r = nbrs; r; r &= r - 1) rows[static_cast<std::size_t>(std::countr_zero(r))] |= 1U << (m - 1);
                next.insert(code_of(canonical_rows(rows, m), m));
            }
        }
        codes.assign(next.begin(), next.end());
    }

    std::vector<Graph> graphs;
    graphs.reserve(codes.size());
    for (std::uint64_t code : codes) graphs.push_back(graph_of(rows_from_code(code, n), n));
    // graph6 order equals code order for equal n, so `codes` is already sorted
    return cache.emplace(n, std::move(graphs)).first->second;
}

std::vector<Graph> connected_graphs_up_to_isomorphism(int n) {
    std::vector<Graph> out;
    for (const auto& g : graphs_up_to_isomorphism(n))
        if (is_connected(g)) out.push_back(g);
    return out;
}

}  // namespace copnum
