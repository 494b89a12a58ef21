#pragma once

// Brute-force reference computations used only by the tests. None of these
// call into the library.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;

inline u64 bits_by_division(u64 n)
{
    u64 count = 0;
    while (n != 0) {
        count += n % 2;
        n /= 2;
    }
    return count;
}

/// f(n) as the literal sum s(0) + ... + s(n-1).
inline u64 f_sum(u64 n)
{
    u64 total = 0;
    for (u64 i = 0; i < n; ++i) {
        total += bits_by_division(i);
    }
    return total;
}

/// Prefix table f(0..limit) with f(0) = 0 by the same literal sum.
inline std::vector<u64> f_table(u64 limit)
{
    std::vector<u64> table(limit + 1, 0);
    for (u64 n = 1; n <= limit; ++n) {
        table[n] = table[n - 1] + bits_by_division(n - 1);
    }
    return table;
}

/// Splits (n0, n1), n0 >= n1 >= 1, with n1 + f(n1) + f(n0) == f(n), found by
/// trying every split against the literal-sum f.
inline std::vector<std::pair<u64, u64>> maximizing_splits(u64 n, const std::vector<u64>& f)
{
    u64 best = 0;
    for (u64 small = 1; small <= n / 2; ++small) {
        best = std::max(best, small + f[small] + f[n - small]);
    }
    std::vector<std::pair<u64, u64>> out;
    for (u64 small = 1; small <= n / 2; ++small) {
        if (small + f[small] + f[n - small] == best) {
            out.emplace_back(n - small, small);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Splits read off the columns of the n x k matrix whose rows are the k-digit
/// binary expansions of 0..n-1.
inline std::vector<std::pair<u64, u64>> column_splits(u64 n)
{
    unsigned k = 0;
    while ((u64{1} << k) < n) {
        ++k;
    }
    std::set<std::pair<u64, u64>> found;
    for (unsigned column = 0; column < k; ++column) {
        u64 zeros = 0;
        for (u64 row = 0; row < n; ++row) {
            std::vector<int> digits(k);
            u64 value = row;
            for (unsigned t = 0; t < k; ++t) {
                digits[k - 1 - t] = static_cast<int>(value % 2);
                value /= 2;
            }
            zeros += digits[column] == 0 ? 1 : 0;
        }
        const u64 ones = n - zeros;
        if (zeros >= 1 && ones >= 1) {
            found.emplace(std::max(zeros, ones), std::min(zeros, ones));
        }
    }
    return {found.begin(), found.end()};
}

/// Maximum induced edges over all n-subsets of {0, ..., 2^k - 1} with
/// Hamming-1 adjacency, by recursive choice of members.
inline u64 max_induced_edges(u64 n, unsigned k)
{
    const u64 vertices = u64{1} << k;
    std::vector<u64> chosen;
    u64 best = 0;
    auto recurse = [&](auto&& self, u64 next, u64 edges) -> void {
        if (chosen.size() == n) {
            best = std::max(best, edges);
            return;
        }
        if (vertices - next < n - chosen.size()) {
            return;
        }
        for (u64 v = next; v < vertices; ++v) {
            u64 added = 0;
            for (const u64 w : chosen) {
                added += bits_by_division(v ^ w) == 1 ? 1 : 0;
            }
            chosen.push_back(v);
            self(self, v + 1, edges + added);
            chosen.pop_back();
        }
    };
    recurse(recurse, 0, 0);
    return best;
}

/// Pairwise induced edge count of a point list.
inline u64 pairwise_edges(const std::vector<u64>& points)
{
    u64 edges = 0;
    for (std::size_t a = 0; a < points.size(); ++a) {
        for (std::size_t b = a + 1; b < points.size(); ++b) {
            edges += bits_by_division(points[a] ^ points[b]) == 1 ? 1 : 0;
        }
    }
    return edges;
}

/// Every valid alternating exponent list with leading exponent <= top, keyed
/// by its value (a later list with the same value overwrites an earlier one).
inline std::map<u64, std::vector<unsigned>> alternating_lists(unsigned top)
{
    std::map<u64, std::vector<unsigned>> by_value;
    std::vector<unsigned> list;
    auto visit = [&](auto&& self) -> void {
        const std::size_t len = list.size();
        if (len == 1 || (len >= 2 && list[len - 2] > list[len - 1] + 1)) {
            long long value = 0;
            for (std::size_t t = 0; t < len; ++t) {
                const long long term = 1LL << list[t];
                value += (t % 2 == 0) ? term : -term;
            }
            by_value[static_cast<u64>(value)] = list;
        }
        for (unsigned next = 0; next < list.back(); ++next) {
            list.push_back(next);
            self(self);
            list.pop_back();
        }
    };
    for (unsigned a = 0; a <= top; ++a) {
        list.assign(1, a);
        visit(visit);
    }
    return by_value;
}

} // namespace oracle
