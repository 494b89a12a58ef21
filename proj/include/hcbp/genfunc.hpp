#pragma once

// Truncated expansions of
//   c(x) = 1/(1-x) + sum_{i>=1} c_i(x),   h(x) = sum_{i>=1} c_i(x),
//   c_i(x) = x^{2^{i-1}+1} (1 - x^{2^i - 1}) / ((1 - x)(1 - x^{2^{i+1}})),
// using dense exact-integer coefficient vectors.

#include <cstdint>
#include <vector>

#include "hcbp/types.hpp"

namespace hcbp {

struct SeriesCoeffs {
    std::vector<std::uint64_t> coeffs; // coefficient of x^n at index n

    std::size_t order() const noexcept { return coeffs.size(); }
    std::uint64_t operator[](std::size_t n) const { return coeffs.at(n); }
};

/// 1 iff |(n mod 2^{i+1}) - 2^i| < 2^{i-1}; c_0(n) = 1 for every n.
unsigned c_i_indicator(unsigned i, Index n);

/// 1 + sum_{i=1}^{ceil(lg n)} c_i(n).
Index c_via_slices(Index n);

/// Expansion of the single slice c_i(x) (i >= 1) up to x^{order-1}.
SeriesCoeffs expand_slice(unsigned i, std::size_t order);

SeriesCoeffs expand_h(std::size_t order);
SeriesCoeffs expand_c(std::size_t order);

} // namespace hcbp
