#include "hcbp/core_sequences.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hcbp {

std::string to_string(Wide value)
{
    if (value == 0) {
        return "0";
    }
    std::string out;
    while (value != 0) {
        out.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
        value /= 10;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

Wide f_digit(Index n)
{
    if (n == 0) {
        throw std::invalid_argument("f_digit: n must be >= 1");
    }
    // Ones in bit b among 0..n-1: full blocks of 2^{b+1} contribute 2^b each,
    // the partial block contributes max(0, rem - 2^b).
    Wide total = 0;
    for (unsigned b = 0; b < 63 && (Index{1} << b) < n; ++b) {
        const Index half = Index{1} << b;
        const Index period = half << 1;
        total += static_cast<Wide>(n / period) * half;
        const Index rem = n % period;
        if (rem > half) {
            total += rem - half;
        }
    }
    return total;
}

Wide HalvingMemo::operator()(Index n)
{
    if (n == 0) {
        throw std::invalid_argument("f_dc: n must be >= 1");
    }
    if (n == 1) {
        return 0;
    }
    if (auto it = memo_.find(n); it != memo_.end()) {
        return it->second;
    }
    const Index lo = n / 2;
    const Index hi = n - lo;
    const Wide value = static_cast<Wide>(lo) + (*this)(lo) + (*this)(hi);
    memo_.emplace(n, value);
    return value;
}

Wide f_dc(Index n)
{
    HalvingMemo memo;
    return memo(n);
}

MaximinTable::MaximinTable(Index limit)
{
    if (limit < 1) {
        throw std::invalid_argument("MaximinTable: limit must be >= 1");
    }
    values_.assign(limit + 1, 0);
    for (Index m = 2; m <= limit; ++m) {
        Wide best = 0;
        for (Index small = 1; small <= m / 2; ++small) {
            const Wide candidate = small + values_[small] + values_[m - small];
            best = std::max(best, candidate);
        }
        values_[m] = best;
    }
}

Wide MaximinTable::value(Index n) const
{
    if (n == 0 || n > limit()) {
        throw std::out_of_range("MaximinTable: n outside [1, " + std::to_string(limit()) + "]");
    }
    return values_[n];
}

MaximinResult MaximinTable::solve(Index n) const
{
    if (n < 2) {
        throw std::invalid_argument("f_maximin: n must be >= 2");
    }
    MaximinResult result;
    result.value = value(n);
    for (Index small = 1; small <= n / 2; ++small) {
        if (small + values_[small] + values_[n - small] == result.value) {
            result.argmax.push_back(Bipartition{n - small, small});
        }
    }
    std::sort(result.argmax.begin(), result.argmax.end());
    return result;
}

MaximinResult f_maximin(Index n)
{
    if (n < 2) {
        throw std::invalid_argument("f_maximin: n must be >= 2");
    }
    return MaximinTable(n).solve(n);
}

Index d(unsigned i, Index n)
{
    if (i == 0) {
        throw std::invalid_argument("d: index i must be >= 1");
    }
    if (i > 63 || n <= pow2(i - 1)) {
        return n;
    }
    const Index half = pow2(i - 1);
    const Index r = n & (pow2(i) - 1);
    return half - (r >= half ? r - half : half - r);
}

std::uint64_t lg_q32(Index n)
{
    if (n == 0) {
        throw std::invalid_argument("lg_q32: n must be >= 1");
    }
    const unsigned e = floor_lg(n);
    // Mantissa n / 2^e in [1, 2) as Q62.
    constexpr unsigned kMant = 62;
    Index y = e >= kMant ? n >> (e - kMant) : n << (kMant - e);
    std::uint64_t frac = 0;
    for (unsigned bit = 0; bit < Deficit::kFractionBits; ++bit) {
        const Wide sq = static_cast<Wide>(y) * y;
        y = static_cast<Index>(sq >> kMant);
        frac <<= 1;
        if (y >= (Index{1} << (kMant + 1))) {
            y >>= 1;
            frac |= 1;
        }
    }
    return (static_cast<std::uint64_t>(e) << Deficit::kFractionBits) | frac;
}

double Deficit::value() const noexcept
{
    return static_cast<double>(scaled) / static_cast<double>(std::uint64_t{1} << kFractionBits);
}

Deficit deficit(Index n)
{
    const __int128 f2 = static_cast<__int128>(f_digit(n)) << (Deficit::kFractionBits + 1);
    const __int128 nlg = static_cast<__int128>(n) * static_cast<__int128>(lg_q32(n));
    __int128 twice = f2 - nlg;
    // floor division by 2
    __int128 half = twice >= 0 ? twice / 2 : -((-twice + 1) / 2);
    return Deficit{half};
}

} // namespace hcbp
