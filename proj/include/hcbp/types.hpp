#pragma once

// Integer vocabulary shared by every module.
//
// Indices n are 64-bit. Values that grow like (n/2) lg n (the maximin solution
// f and its partial sums) are carried in 128 bits: f(2^62) is about 2^67.

#include <cstdint>
#include <string>

namespace hcbp {

using Index = std::uint64_t;
using Wide = unsigned __int128;

/// Largest index accepted by operations that need n + 1 or 2n headroom.
inline constexpr Index kMaxIndex = Index{1} << 62;

/// Smallest k with 2^k >= n, for n >= 1; ceil_lg(1) == 0.
constexpr unsigned ceil_lg(Index n) noexcept
{
    if (n <= 1) {
        return 0;
    }
    return 64U - static_cast<unsigned>(__builtin_clzll(n - 1));
}

/// Largest k with 2^k <= n, for n >= 1.
constexpr unsigned floor_lg(Index n) noexcept
{
    return 63U - static_cast<unsigned>(__builtin_clzll(n));
}

constexpr Index pow2(unsigned k) noexcept { return Index{1} << k; }

std::string to_string(Wide value);

} // namespace hcbp
