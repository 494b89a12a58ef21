#include "hcbp/genfunc.hpp"

#include <stdexcept>

namespace hcbp {

namespace {

void require_order(std::size_t order)
{
    if (order < 1) {
        throw std::invalid_argument("series order must be >= 1");
    }
}

// In-place multiplication by 1 / (1 - x^step), truncated.
void divide_by_one_minus_power(std::vector<std::int64_t>& series, std::size_t step)
{
    for (std::size_t n = step; n < series.size(); ++n) {
        series[n] += series[n - step];
    }
}

void accumulate(std::vector<std::uint64_t>& into, const std::vector<std::uint64_t>& term)
{
    for (std::size_t n = 0; n < into.size(); ++n) {
        into[n] += term[n];
    }
}

} // namespace

unsigned c_i_indicator(unsigned i, Index n)
{
    if (i == 0) {
        return 1;
    }
    if (i > 120) {
        return 0;
    }
    const Wide modulus = Wide{1} << (i + 1);
    const Wide r = static_cast<Wide>(n) & (modulus - 1);
    const Wide mid = Wide{1} << i;
    const Wide dist = r >= mid ? r - mid : mid - r;
    return dist < (Wide{1} << (i - 1)) ? 1U : 0U;
}

Index c_via_slices(Index n)
{
    Index total = 1;
    const unsigned k = n == 0 ? 0 : ceil_lg(n);
    for (unsigned i = 1; i <= k; ++i) {
        total += c_i_indicator(i, n);
    }
    return total;
}

SeriesCoeffs expand_slice(unsigned i, std::size_t order)
{
    require_order(order);
    if (i == 0 || i >= 62) {
        throw std::invalid_argument("expand_slice: i must be in [1, 61]");
    }
    // Numerator x^{2^{i-1}+1} - x^{2^{i-1}+2^i}.
    std::vector<std::int64_t> series(order, 0);
    const std::size_t low = pow2(i - 1) + 1;
    const std::size_t high = pow2(i - 1) + pow2(i);
    if (low < order) {
        series[low] += 1;
    }
    if (high < order) {
        series[high] -= 1;
    }
    divide_by_one_minus_power(series, 1);
    divide_by_one_minus_power(series, pow2(i + 1));
    std::vector<std::uint64_t> coeffs(order);
    for (std::size_t n = 0; n < order; ++n) {
        if (series[n] < 0) {
            throw std::logic_error("expand_slice: negative coefficient");
        }
        coeffs[n] = static_cast<std::uint64_t>(series[n]);
    }
    return SeriesCoeffs{std::move(coeffs)};
}

SeriesCoeffs expand_h(std::size_t order)
{
    require_order(order);
    std::vector<std::uint64_t> total(order, 0);
    for (unsigned i = 1; i < 62 && pow2(i - 1) + 1 < order; ++i) {
        accumulate(total, expand_slice(i, order).coeffs);
    }
    return SeriesCoeffs{std::move(total)};
}

SeriesCoeffs expand_c(std::size_t order)
{
    auto series = expand_h(order);
    for (auto& coefficient : series.coeffs) {
        coefficient += 1; // 1/(1-x)
    }
    return series;
}

} // namespace hcbp
