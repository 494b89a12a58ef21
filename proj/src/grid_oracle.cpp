#include "hcbp/grid_oracle.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

namespace hcbp {

namespace {

constexpr unsigned kMaxPointDimension = 63;
constexpr unsigned kMaxMaskDimension = 6; // 2^k vertices must fit one 64-bit mask
constexpr unsigned kDenseDimension = 24;

void require_dimension(unsigned k)
{
    if (k < 1 || k > kMaxPointDimension) {
        throw std::invalid_argument("dimension k must be in [1, 63], got " + std::to_string(k));
    }
}

// C(n, r) saturating at UINT64_MAX.
std::uint64_t saturating_binomial(std::uint64_t n, std::uint64_t r)
{
    if (r > n) {
        return 0;
    }
    r = std::min(r, n - r);
    Wide result = 1;
    for (std::uint64_t t = 1; t <= r; ++t) {
        result = result * (n - r + t) / t;
        if (result > UINT64_MAX) {
            return UINT64_MAX;
        }
    }
    return static_cast<std::uint64_t>(result);
}

// Edges of the subgraph of Q_k induced by the vertex mask (k <= 6).
unsigned mask_edges(std::uint64_t mask, unsigned k)
{
    // Vertices whose bit j is zero, for j = 0..5.
    static constexpr std::uint64_t kLowSide[kMaxMaskDimension] = {
        0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
        0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL,
    };
    unsigned edges = 0;
    for (unsigned j = 0; j < k; ++j) {
        const unsigned shift = 1U << j;
        edges += static_cast<unsigned>(__builtin_popcountll(mask & (mask >> shift) & kLowSide[j]));
    }
    return edges;
}

} // namespace

BitPoint::BitPoint(Index bits, unsigned k) : bits_(bits), k_(k)
{
    require_dimension(k);
    if (k < 64 && (bits >> k) != 0) {
        throw std::invalid_argument("BitPoint: value does not fit in k bits");
    }
}

unsigned BitPoint::coordinate(unsigned i) const
{
    if (i < 1 || i > k_) {
        throw std::out_of_range("BitPoint: coordinate outside [1, k]");
    }
    return static_cast<unsigned>((bits_ >> (k_ - i)) & 1U);
}

unsigned hamming(const BitPoint& a, const BitPoint& b)
{
    if (a.dimension() != b.dimension()) {
        throw std::invalid_argument("hamming: dimension mismatch");
    }
    return static_cast<unsigned>(__builtin_popcountll(a.bits() ^ b.bits()));
}

PointSet::PointSet(unsigned k, std::vector<Index> points) : k_(k), points_(std::move(points))
{
    require_dimension(k);
    if (points_.empty()) {
        throw std::invalid_argument("PointSet: at least one point required");
    }
    std::unordered_set<Index> seen;
    seen.reserve(points_.size());
    for (const Index p : points_) {
        if ((p >> k) != 0) {
            throw std::invalid_argument("PointSet: point does not fit in k bits");
        }
        if (!seen.insert(p).second) {
            throw std::invalid_argument("PointSet: duplicate point " + std::to_string(p));
        }
    }
}

PointSet beta_prefix(Index n, unsigned k)
{
    if (n == 0) {
        throw std::invalid_argument("beta_prefix: n must be >= 1");
    }
    require_dimension(k);
    if (k < 64 && pow2(k) < n) {
        throw std::invalid_argument("beta_prefix: 2^k < n");
    }
    std::vector<Index> points(n);
    for (Index i = 0; i < n; ++i) {
        points[i] = i;
    }
    return PointSet(k, std::move(points));
}

Index induced_edge_count(const PointSet& points)
{
    const unsigned k = points.dimension();
    Index edges = 0;
    if (k <= kDenseDimension) {
        std::vector<bool> present(pow2(k), false);
        for (const Index p : points.raw()) {
            present[p] = true;
        }
        for (const Index p : points.raw()) {
            for (unsigned j = 0; j < k; ++j) {
                const Index q = p ^ pow2(j);
                if (q > p && present[q]) {
                    ++edges;
                }
            }
        }
        return edges;
    }
    const std::unordered_set<Index> present(points.raw().begin(), points.raw().end());
    for (const Index p : points.raw()) {
        for (unsigned j = 0; j < k; ++j) {
            const Index q = p ^ pow2(j);
            if (q > p && present.count(q) != 0) {
                ++edges;
            }
        }
    }
    return edges;
}

Index exhaustive_max_edges(Index n, unsigned k, ExhaustiveBudget budget)
{
    require_dimension(k);
    if (k > budget.max_dimension) {
        throw BudgetExceeded("exhaustive_max_edges: k = " + std::to_string(k) +
                             " exceeds the dimension budget " +
                             std::to_string(budget.max_dimension));
    }
    if (k > kMaxMaskDimension) {
        throw BudgetExceeded("exhaustive_max_edges: k > 6 is not supported by the mask search");
    }
    const unsigned vertices = 1U << k;
    if (n < 1 || n > vertices) {
        throw std::invalid_argument("exhaustive_max_edges: need 1 <= n <= 2^k");
    }
    const std::uint64_t subsets = saturating_binomial(vertices, n);
    if (subsets > budget.max_subsets) {
        throw BudgetExceeded("exhaustive_max_edges: C(" + std::to_string(vertices) + ", " +
                             std::to_string(n) + ") = " + std::to_string(subsets) +
                             " subsets exceeds the budget of " +
                             std::to_string(budget.max_subsets));
    }
    if (n == vertices) {
        return mask_edges(vertices == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1, k);
    }

    // Gosper's hack: every mask with n set bits below 2^vertices, ascending.
    std::uint64_t mask = (std::uint64_t{1} << n) - 1;
    unsigned best = 0;
    for (std::uint64_t visited = 0; visited < subsets; ++visited) {
        best = std::max(best, mask_edges(mask, k));
        const std::uint64_t low = mask & (~mask + 1);
        const std::uint64_t ripple = mask + low;
        if (ripple == 0) {
            break;
        }
        mask = (((ripple ^ mask) >> 2) / low) | ripple;
    }
    return best;
}

Index column_imbalance(Index n, unsigned coordinate)
{
    if (n < 1) {
        throw std::invalid_argument("column_imbalance: n must be >= 1");
    }
    const unsigned k = ceil_lg(n);
    if (coordinate < 1 || coordinate > k) {
        throw std::out_of_range("column_imbalance: coordinate outside [1, ceil(lg n)]");
    }
    const PointSet points = beta_prefix(n, k);
    Index zeros = 0;
    for (std::size_t t = 0; t < points.size(); ++t) {
        if (points.at(t).coordinate(coordinate) == 0) {
            ++zeros;
        }
    }
    const Index ones = n - zeros;
    // Zeros never trail ones in a prefix of 0..n-1.
    return zeros - ones;
}

HcbpSet coordinate_splits(Index n)
{
    if (n < 2) {
        throw std::invalid_argument("coordinate_splits: n must be >= 2");
    }
    const unsigned k = ceil_lg(n);
    const PointSet points = beta_prefix(n, k);
    HcbpSet set{n, {}};
    for (unsigned i = 1; i <= k; ++i) {
        Index zeros = 0;
        for (std::size_t t = 0; t < points.size(); ++t) {
            zeros += points.at(t).coordinate(i) == 0 ? 1 : 0;
        }
        const Bipartition pair = make_bipartition(zeros, n - zeros);
        if (pair.proper()) {
            set.pairs.push_back(pair);
        }
    }
    std::sort(set.pairs.begin(), set.pairs.end());
    set.pairs.erase(std::unique(set.pairs.begin(), set.pairs.end()), set.pairs.end());
    return set;
}

} // namespace hcbp
