#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "copnum/graph.hpp"

namespace copnum {

enum class Family { cycle, path, complete, petersen, hoffman_singleton, polarity, incidence };

/// A named graph family plus its parameter: the order for cycle, path and
/// complete; the prime q for polarity and incidence; unused otherwise.
struct GraphFamily {
    Family family;
    int parameter = 0;
};

std::string_view family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);

/// Largest field order the finite-geometry generators accept.
inline constexpr int kMaxFieldOrder = 13;

/// Deterministic labelled construction.
///
/// - petersen: Kneser graph K(5,2); vertex i is the i-th 2-subset of {0..4}
///   in lexicographic order, adjacent iff disjoint.
/// - hoffman_singleton: pentagons P_h (labels 5h+j, j ~ j+-1) and pentagrams
///   Q_i (labels 25+5i+j, j ~ j+-2), with P_h[j] ~ Q_i[h*i+j mod 5].
/// - polarity: points of PG(2,q) (see projective_points), x ~ y iff
///   x.y = 0 mod q and x != y.
/// - incidence: points 0..N-1 then lines N..2N-1 of PG(2,q), point ~ line
///   iff incident.
///
/// Throws PreconditionError for invalid parameters (q must be a prime <= 13).
Graph generate(const GraphFamily& family);

/// Points of PG(2,q) as normalised homogeneous triples (first nonzero
/// coordinate is 1), in lexicographic order. Requires prime q.
std::vector<std::array<int, 3>> projective_points(int q);

}  // namespace copnum
