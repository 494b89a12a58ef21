#pragma once

// Binary digit sums, the divide-and-conquer maximin solution f(n) computed
// three independent ways, and the column-imbalance function d_i(n).

#include <cstdint>
#include <map>
#include <vector>

#include "hcbp/types.hpp"

namespace hcbp {

/// Split n = n0 + n1 stored with n0 >= n1. Proper iff n1 >= 1.
struct Bipartition {
    Index n0 = 0;
    Index n1 = 0;

    constexpr Index total() const noexcept { return n0 + n1; }
    constexpr bool proper() const noexcept { return n1 >= 1; }

    friend constexpr auto operator<=>(const Bipartition&, const Bipartition&) = default;
};

/// Orders the parts so that n0 >= n1.
constexpr Bipartition make_bipartition(Index a, Index b) noexcept
{
    return a >= b ? Bipartition{a, b} : Bipartition{b, a};
}

struct MaximinResult {
    Wide value = 0;
    std::vector<Bipartition> argmax; // sorted ascending by (n0, n1)
};

/// Number of 1-bits of n.
constexpr unsigned digit_sum(Index n) noexcept
{
    return static_cast<unsigned>(__builtin_popcountll(n));
}

/// f(n) = sum_{i < n} s(i), counted column by column. Throws on n == 0.
Wide f_digit(Index n);

/// f(n) by the halving recursion f(n) = floor(n/2) + f(floor(n/2)) + f(ceil(n/2)).
/// Throws on n == 0.
Wide f_dc(Index n);

/// Memo for the halving recursion. Not shareable across threads; f_dc()
/// builds a private one per call.
class HalvingMemo {
public:
    Wide operator()(Index n);
    std::size_t size() const noexcept { return memo_.size(); }

private:
    std::map<Index, Wide> memo_;
};

/// Dense table of the maximin recurrence
///   F(1) = 0, F(m) = max_{a + b = m, a >= b >= 1} (b + F(a) + F(b)),
/// filled in O(limit^2). This is the certifying oracle, not a production path.
class MaximinTable {
public:
    explicit MaximinTable(Index limit);

    Index limit() const noexcept { return static_cast<Index>(values_.size()) - 1; }
    Wide value(Index n) const;
    /// Every split attaining the maximum, for 2 <= n <= limit().
    MaximinResult solve(Index n) const;

private:
    std::vector<Wide> values_; // values_[0] unused
};

/// Convenience wrapper building a table up to n. Throws on n < 2.
MaximinResult f_maximin(Index n);

/// d_i(n) = 2^{i-1} - |(n mod 2^i) - 2^{i-1}|; equals n once 2^{i-1} >= n.
/// Throws on i == 0.
Index d(unsigned i, Index n);

/// f(n) - (n/2) lg n with lg evaluated in Q32 fixed point.
struct Deficit {
    static constexpr unsigned kFractionBits = 32;

    __int128 scaled = 0; // value * 2^kFractionBits, truncated toward -inf

    double value() const noexcept;
};

/// lg n in Q32 fixed point (floor of the exact value times 2^32). n >= 1.
std::uint64_t lg_q32(Index n);

Deficit deficit(Index n);

} // namespace hcbp
