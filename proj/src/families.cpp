#include "copnum/families.hpp"

#include <array>
#include <string>

#include "copnum/errors.hpp"

namespace copnum {

namespace {

constexpr std::array<std::string_view, 7> kNames = {"cycle",   "path",     "complete", "petersen",
                                                    "hoffman_singleton", "polarity", "incidence"};

bool is_prime(int q) {
    if (q < 2) return false;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

void require_field_order(int q) {
    if (!is_prime(q) || q > kMaxFieldOrder)
        throw PreconditionError("unsupported field order " + std::to_string(q) + ": need a prime <= " +
                                std::to_string(kMaxFieldOrder));
}

int dot_mod(const std::array<int, 3>& a, const std::array<int, 3>& b, int q) {
    return (a[0] * b[0] + a[1] * b[1] + a[2] * b[2]) % q;
}

Graph cycle(int n) {
    if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
    Graph g(n);
    for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph path(int n) {
    if (n < 1) throw PreconditionError("path needs at least 1 vertex");
    Graph g(n);
    for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph complete(int n) {
    if (n < 1) throw PreconditionError("complete graph needs at least 1 vertex");
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph petersen() {
    std::vector<std::array<int, 2>> pairs;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) pairs.push_back({a, b});
    Graph g(10);
    for (std::size_t i = 0; i < pairs.size(); ++i)
        for (std::size_t j = i + 1; j < pairs.size(); ++j) {
            const auto& x = pairs[i];
            const auto& y = pairs[j];
            if (x[0] != y[0] && x[0] != y[1] && x[1] != y[0] && x[1] != y[1])
                g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
        }
    return g;
}

Graph hoffman_singleton() {
    Graph g(50);
    auto pentagon = [](int h, int j) { return 5 * h + (j % 5); };
    auto pentagram = [](int i, int j) { return 25 + 5 * i + (j % 5); };
    for (int h = 0; h < 5; ++h)
        for (int j = 0; j < 5; ++j) {
            g.add_edge(pentagon(h, j), pentagon(h, j + 1));
            g.add_edge(pentagram(h, j), pentagram(h, j + 2));
        }
    for (int h = 0; h < 5; ++h)
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) g.add_edge(pentagon(h, j), pentagram(i, h * i + j));
    return g;
}

Graph polarity(int q) {
    auto pts = projective_points(q);
    Graph g(static_cast<int>(pts.size()));
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (dot_mod(pts[i], pts[j], q) == 0) g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    return g;
}

Graph incidence(int q) {
    auto pts = projective_points(q);
    const int n = static_cast<int>(pts.size());
    Graph g(2 * n);
    for (int p = 0; p < n; ++p)
        for (int l = 0; l < n; ++l)
            if (dot_mod(pts[static_cast<std::size_t>(p)], pts[static_cast<std::size_t>(l)], q) == 0)
                g.add_edge(p, n + l);
    return g;
}

}  // namespace

std::string_view family_name(Family f) { return kNames[static_cast<std::size_t>(f)]; }

std::optional<Family> family_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kNames.size(); ++i)
        if (kNames[i] == name) return static_cast<Family>(i);
    return std::nullopt;
}

std::vector<std::array<int, 3>> projective_points(int q) {
    require_field_order(q);
    std::vector<std::array<int, 3>> pts;
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            for (int c = 0; c < q; ++c) {
                std::array<int, 3> x{a, b, c};
                int lead = a != 0 ? a : (b != 0 ? b : c);
                if (lead == 1) pts.push_back(x);
            }
    return pts;
}

Graph generate(const GraphFamily& family) {
    switch (family.family) {
        case Family::cycle: return cycle(family.parameter);
        case Family::path: return path(family.parameter);
        case Family::complete: return complete(family.parameter);
        case Family::petersen: return petersen();
        case Family::hoffman_singleton: return hoffman_singleton();
        case Family::polarity: require_field_order(family.parameter); return polarity(family.parameter);
        case Family::incidence: require_field_order(family.parameter); return incidence(family.parameter);
    }
    throw PreconditionError("unknown graph family");
}

}  // namespace copnum
