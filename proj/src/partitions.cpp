#include "hcbp/partitions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "hcbp/abr.hpp"

namespace hcbp {

namespace {

void require_index(Index n, const char* who)
{
    if (n > kMaxIndex) {
        throw std::out_of_range(std::string(who) + ": n exceeds 2^62");
    }
}

} // namespace

std::vector<WitnessedPair> witnessed_hcbp(Index n)
{
    if (n < 2) {
        throw std::invalid_argument("enumerate_hcbp: n must be >= 2");
    }
    require_index(n, "enumerate_hcbp");
    std::vector<WitnessedPair> out;
    const unsigned k = ceil_lg(n);
    for (unsigned i = 1; i <= k; ++i) {
        const Index imbalance = d(i, n);
        if (imbalance == n) {
            continue; // trivial split (n, 0)
        }
        // n and d_i(n) always share parity.
        const Bipartition pair{(n + imbalance) / 2, (n - imbalance) / 2};
        auto it = std::find_if(out.begin(), out.end(),
                               [&](const WitnessedPair& w) { return w.pair == pair; });
        if (it == out.end()) {
            out.push_back(WitnessedPair{pair, imbalance, {i}});
        } else {
            it->indices.push_back(i);
        }
    }
    std::sort(out.begin(), out.end(),
              [](const WitnessedPair& a, const WitnessedPair& b) { return a.pair < b.pair; });
    return out;
}

HcbpSet enumerate_hcbp(Index n)
{
    HcbpSet set{n, {}};
    for (const auto& w : witnessed_hcbp(n)) {
        set.pairs.push_back(w.pair);
    }
    return set;
}

Index h_enum(Index n)
{
    if (n < 2) {
        return 0;
    }
    return enumerate_hcbp(n).size();
}

unsigned reflect_steps(Index n)
{
    require_index(n, "reflect_steps");
    unsigned steps = 0;
    while (n > 2) {
        n = pow2(ceil_lg(n)) - n;
        ++steps;
    }
    return steps;
}

Index h_reflect(Index n)
{
    require_index(n, "h_reflect");
    // Unrolled h(n) = h(2^ceil(lg n) - n) + 1 with h(0) = h(1) = 0, h(2) = 1.
    Index added = 0;
    while (n > 2) {
        n = pow2(ceil_lg(n)) - n;
        ++added;
    }
    return added + (n == 2 ? 1 : 0);
}

Index c_reflect(Index n)
{
    require_index(n, "c_reflect");
    Index added = 0;
    while (n > 1) {
        n = pow2(ceil_lg(n)) - n;
        ++added;
    }
    return added + 1;
}

Index h_mod8(Index n)
{
    require_index(n, "h_mod8");
    static constexpr Index kBase[9] = {0, 0, 1, 1, 1, 2, 2, 1, 1};
    Index added = 0;
    while (n > 8) {
        switch (n % 8) {
        case 0:
        case 4:
            n /= 2;
            break;
        case 2:
        case 6:
            n /= 2;
            ++added;
            break;
        case 1:
            n = (n + 1) / 2;
            break;
        case 3:
            n = (n - 1) / 2;
            ++added;
            break;
        case 5:
            n = (n + 1) / 2;
            ++added;
            break;
        case 7:
            n = (n - 1) / 2;
            break;
        }
    }
    return added + kBase[n];
}

Index h_abr(Index n)
{
    if (n == 0) {
        return 0;
    }
    const Index length = abr_greedy(n).length();
    return (n % 2 == 1) ? length - 1 : length;
}

Index c_count(Index n)
{
    require_index(n, "c_count");
    if (n <= 1) {
        return 1;
    }
    // For i > ceil(lg n) every d_i(n) equals n, so one extra index covers the tail.
    std::set<Index> values;
    const unsigned k = ceil_lg(n);
    for (unsigned i = 1; i <= k + 1; ++i) {
        values.insert(d(i, n));
    }
    return values.size();
}

Index alternating_extreme(unsigned k)
{
    if (k < 1 || k > 61) {
        throw std::out_of_range("alternating_extreme: k must be in [1, 61]");
    }
    const Index twice = pow2(k + 1);
    return (k % 2 == 0 ? twice + 1 : twice - 1) / 3;
}

std::uint64_t binomial(unsigned n, unsigned r)
{
    if (r > n) {
        return 0;
    }
    r = std::min(r, n - r);
    std::uint64_t result = 1;
    for (unsigned t = 1; t <= r; ++t) {
        result = result * (n - r + t) / t;
    }
    return result;
}

std::vector<StrataRow> strata_table(unsigned k, StrataOptions options)
{
    if (k < 2) {
        throw std::invalid_argument("strata: k must be >= 2");
    }
    if (k > options.max_brute_k) {
        throw std::invalid_argument("strata: k = " + std::to_string(k) +
                                    " exceeds the brute-force cutoff " +
                                    std::to_string(options.max_brute_k));
    }
    std::vector<StrataRow> rows(k - 1);
    for (unsigned level = 1; level < k; ++level) {
        rows[level - 1].level = level;
        rows[level - 1].formula_count = 2 * binomial(k - 2, level - 1);
    }
    for (Index n = pow2(k - 1) + 1; n <= pow2(k); ++n) {
        const Index h = h_enum(n);
        if (h < 1 || h >= k) {
            throw std::domain_error("strata: h(" + std::to_string(n) + ") = " +
                                    std::to_string(h) + " outside [1, k-1]");
        }
        ++rows[h - 1].brute_count;
    }
    return rows;
}

std::vector<StrataRow> strata(unsigned k, StrataOptions options)
{
    auto rows = strata_table(k, options);
    for (const auto& row : rows) {
        if (!row.agrees()) {
            throw std::domain_error("strata: k = " + std::to_string(k) + ", l = " +
                                    std::to_string(row.level) + ": scan found " +
                                    std::to_string(row.brute_count) + ", formula gives " +
                                    std::to_string(row.formula_count));
        }
    }
    return rows;
}

ExtremalSets extremal_pairs(unsigned k, StrataOptions options)
{
    if (k < 2 || k > 61) {
        throw std::invalid_argument("extremal_pairs: k must be in [2, 61]");
    }
    ExtremalSets sets;
    sets.min_set = {pow2(k) - 1, pow2(k)};
    const Index a = alternating_extreme(k);
    if (k == 2) {
        sets.max_set = {3, 4};
    } else {
        // Partner of a_k is the even number whose ABR is (k, k-1, ..., 3, 1):
        // a_k - (-1)^k.
        const Index partner = (k % 2 == 0) ? a - 1 : a + 1;
        sets.max_set = {std::min(a, partner), std::max(a, partner)};
    }
    if (k <= options.max_brute_k) {
        ExtremalSets scanned;
        for (Index n = pow2(k - 1) + 1; n <= pow2(k); ++n) {
            const Index h = h_reflect(n);
            if (h == 1) {
                scanned.min_set.push_back(n);
            }
            if (h == k - 1) {
                scanned.max_set.push_back(n);
            }
        }
        if (scanned.min_set != sets.min_set || scanned.max_set != sets.max_set) {
            throw std::domain_error("extremal_pairs: scan disagrees with closed form at k = " +
                                    std::to_string(k));
        }
    }
    return sets;
}

} // namespace hcbp
