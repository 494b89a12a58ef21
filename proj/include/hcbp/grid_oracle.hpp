#pragma once

// Geometric ground truth on the hypercube Q_k: the first n binary points,
// induced edge counts, exhaustive maximisation over n-subsets, and the
// bipartitions cut out by coordinate hyperplanes x_i = 1/2.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hcbp/partitions.hpp"
#include "hcbp/types.hpp"

namespace hcbp {

/// Vertex of Q_k. Coordinate 1 is the most significant of the k bits and
/// coordinate k the least significant, so point i of the prefix reads as the
/// k-digit binary expansion of i.
class BitPoint {
public:
    BitPoint(Index bits, unsigned k);

    Index bits() const noexcept { return bits_; }
    unsigned dimension() const noexcept { return k_; }
    /// Coordinate i in [1, k].
    unsigned coordinate(unsigned i) const;

    friend bool operator==(const BitPoint&, const BitPoint&) = default;

private:
    Index bits_;
    unsigned k_;
};

/// Hamming distance; both points must share a dimension.
unsigned hamming(const BitPoint& a, const BitPoint& b);

class PointSet {
public:
    PointSet(unsigned k, std::vector<Index> points);

    unsigned dimension() const noexcept { return k_; }
    std::size_t size() const noexcept { return points_.size(); }
    const std::vector<Index>& raw() const noexcept { return points_; }
    BitPoint at(std::size_t index) const { return BitPoint(points_.at(index), k_); }

private:
    unsigned k_;
    std::vector<Index> points_; // distinct, insertion order kept
};

/// {beta_k(0), ..., beta_k(n-1)}. Throws if n == 0 or 2^k < n.
PointSet beta_prefix(Index n, unsigned k);

/// Unordered pairs at Hamming distance exactly 1.
Index induced_edge_count(const PointSet& points);

struct ExhaustiveBudget {
    unsigned max_dimension = 4;
    std::uint64_t max_subsets = std::uint64_t{1} << 24;
};

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Maximum induced edge count over all n-subsets of Q_k (k <= 6), searched
/// in increasing-mask order. Throws BudgetExceeded when C(2^k, n) or k is
/// over budget.
Index exhaustive_max_edges(Index n, unsigned k, ExhaustiveBudget budget = {});

/// Zeros minus ones in coordinate column i of the n x ceil(lg n) point matrix.
Index column_imbalance(Index n, unsigned coordinate);

/// Bipartitions from the k = ceil(lg n) coordinate hyperplanes. Throws on n < 2.
HcbpSet coordinate_splits(Index n);

} // namespace hcbp
