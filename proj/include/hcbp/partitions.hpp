#pragma once

// Hypercubic bipartitions (HCBPs) of n and their count h(n), by four
// independent routes:
//   h_enum     distinct values of d_i(n) for 1 <= i <= ceil(lg n)
//   h_reflect  h(n) = h(2^ceil(lg n) - n) + 1
//   h_mod8     halving recurrence dispatched on n mod 4 / n mod 8
//   h_abr      length of the alternating binary representation

#include <cstdint>
#include <vector>

#include "hcbp/core_sequences.hpp"

namespace hcbp {

struct HcbpSet {
    Index n = 0;
    std::vector<Bipartition> pairs; // proper, distinct, sorted ascending

    std::size_t size() const noexcept { return pairs.size(); }
};

/// An HCBP together with every index i whose imbalance d_i(n) produces it.
struct WitnessedPair {
    Bipartition pair;
    Index imbalance = 0;
    std::vector<unsigned> indices;
};

/// {((n + d_i(n))/2, (n - d_i(n))/2) : 1 <= i <= ceil(lg n)} minus the trivial
/// pair (n, 0). Throws on n < 2.
HcbpSet enumerate_hcbp(Index n);

/// Same set, keeping the indices that witness each pair.
std::vector<WitnessedPair> witnessed_hcbp(Index n);

Index h_enum(Index n);
Index h_reflect(Index n);
Index h_mod8(Index n);
Index h_abr(Index n);

/// Number of distinct d_i(n) over all i >= 1 (the trivial split included).
/// c(0) = c(1) = 1.
Index c_count(Index n);

/// c via its reflection recurrence c(n) = c(2^ceil(lg n) - n) + 1.
Index c_reflect(Index n);

/// Number of reflection steps h_reflect takes before reaching n <= 2.
unsigned reflect_steps(Index n);

/// a_k = (2^{k+1} + (-1)^k) / 3, whose ABR is (k, k-1, ..., 2, 0).
Index alternating_extreme(unsigned k);

struct StrataRow {
    unsigned level = 0;      // l, the HCBP count
    Index brute_count = 0;   // |{n : ceil(lg n) = k, h(n) = l}|
    Index formula_count = 0; // 2 * C(k - 2, l - 1)

    bool agrees() const noexcept { return brute_count == formula_count; }
};

struct StrataOptions {
    unsigned max_brute_k = 20;
};

/// Rows for l = 1..k-1. Throws std::domain_error if any row disagrees and
/// std::invalid_argument for k < 2 or k above the brute-force cutoff.
std::vector<StrataRow> strata(unsigned k, StrataOptions options = {});

/// Same table without the agreement check, for reporting.
std::vector<StrataRow> strata_table(unsigned k, StrataOptions options = {});

struct ExtremalSets {
    std::vector<Index> min_set; // h(n) == 1, sorted
    std::vector<Index> max_set; // h(n) == k - 1, sorted
};

/// Closed forms {2^k - 1, 2^k} and {a_k, a_k + (-1)^k}. When k is within the
/// brute-force cutoff the scan over (2^{k-1}, 2^k] must reproduce them or
/// std::domain_error is thrown.
ExtremalSets extremal_pairs(unsigned k, StrataOptions options = {});

std::uint64_t binomial(unsigned n, unsigned r);

} // namespace hcbp
