#pragma once

#include <cstdint>
#include <limits>

namespace copnum {

__extension__ using uint128 = unsigned __int128;

/// floor(sqrt(x)) in pure integer arithmetic.
constexpr std::uint64_t isqrt(std::uint64_t x) {
    if (x < 2) return x;
    std::uint64_t lo = 1;
    std::uint64_t hi = std::uint64_t{1} << 32;
    // invariant: lo*lo <= x < hi*hi
    while (hi - lo > 1) {
        std::uint64_t mid = lo + (hi - lo) / 2;
        if (mid <= x / mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return lo;
}

/// ceil(sqrt(x)).
constexpr std::uint64_t isqrt_ceil(std::uint64_t x) {
    std::uint64_t r = isqrt(x);
    return r * r == x ? r : r + 1;
}

/// Binomial coefficient, saturating at UINT64_MAX.
constexpr std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // result * (n - k + i) / i is exact at every step
        uint128 next = static_cast<uint128>(result) * (n - k + i) / i;
        if (next > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
        result = static_cast<std::uint64_t>(next);
    }
    return result;
}

constexpr std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    uint128 p = static_cast<uint128>(a) * b;
    return p > std::numeric_limits<std::uint64_t>::max() ? std::numeric_limits<std::uint64_t>::max()
                                                          : static_cast<std::uint64_t>(p);
}

}  // namespace copnum
