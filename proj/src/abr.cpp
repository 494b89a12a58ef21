#include "hcbp/abr.hpp"

#include <sstream>

namespace hcbp {

namespace {

void require_positive(Index n, const char* who)
{
    if (n == 0) {
        throw std::invalid_argument(std::string(who) + ": n must be >= 1");
    }
    if (n > kMaxIndex) {
        throw std::out_of_range(std::string(who) + ": n exceeds 2^62");
    }
}

// Returns the index of the first broken link, or rep.length() when the chain holds.
std::size_t first_chain_violation(const AbrRep& rep) noexcept
{
    const auto& e = rep.exponents;
    if (e.empty()) {
        return 0;
    }
    for (std::size_t t = 1; t < e.size(); ++t) {
        const bool last = t + 1 == e.size();
        const unsigned need = last ? e[t] + 1 : e[t];
        if (!(e[t - 1] > need)) {
            return t;
        }
    }
    if (e.front() > 62) {
        return 0;
    }
    return e.size();
}

} // namespace

AbrRep abr_greedy(Index n)
{
    require_positive(n, "abr_greedy");
    AbrRep rep;
    while (true) {
        const unsigned top = ceil_lg(n);
        rep.exponents.push_back(top);
        const Index power = pow2(top);
        if (power == n) {
            break;
        }
        n = power - n;
    }
    return rep;
}

AbrRep abr_runs(Index n)
{
    require_positive(n, "abr_runs");
    AbrRep rep;
    // Scan runs from the most significant bit down. Maximal runs are separated
    // by at least one zero, so 2^{a+1} of a lower run never meets the -2^b of
    // the run above it and the exponents come out strictly decreasing.
    int bit = static_cast<int>(floor_lg(n));
    while (bit >= 0) {
        if (((n >> bit) & 1U) == 0) {
            --bit;
            continue;
        }
        const unsigned high = static_cast<unsigned>(bit);
        while (bit >= 0 && ((n >> bit) & 1U) != 0) {
            --bit;
        }
        const unsigned low = static_cast<unsigned>(bit + 1);
        const bool lowest = (n & (pow2(low) - 1)) == 0;
        if (lowest && high == low) {
            rep.exponents.push_back(low);
        } else {
            rep.exponents.push_back(high + 1);
            rep.exponents.push_back(low);
        }
    }
    return rep;
}

bool abr_valid(const AbrRep& rep) noexcept
{
    return !rep.exponents.empty() && first_chain_violation(rep) == rep.length();
}

Index abr_value(const AbrRep& rep)
{
    const auto bad = first_chain_violation(rep);
    if (rep.exponents.empty()) {
        throw AbrChainError("abr_value: empty exponent list", 0);
    }
    if (bad != rep.length()) {
        std::ostringstream msg;
        if (bad == 0) {
            msg << "abr_value: leading exponent " << rep.exponents[0] << " exceeds 62";
        } else if (bad + 1 == rep.length()) {
            msg << "abr_value: last exponents violate a_" << bad << " > a_" << bad + 1
                << " + 1 (" << rep.exponents[bad - 1] << ", " << rep.exponents[bad] << ")";
        } else {
            msg << "abr_value: exponents not strictly decreasing at a_" << bad << " > a_"
                << bad + 1 << " (" << rep.exponents[bad - 1] << ", " << rep.exponents[bad]
                << ")";
        }
        throw AbrChainError(msg.str(), bad);
    }
    // Each partial sum 2^{a_t} - (next tail) stays positive, so evaluate from
    // the tail upward in unsigned arithmetic.
    Index value = pow2(rep.exponents.back());
    for (std::size_t t = rep.length() - 1; t-- > 0;) {
        value = pow2(rep.exponents[t]) - value;
    }
    return value;
}

std::string abr_format(const AbrRep& rep)
{
    std::ostringstream out;
    for (std::size_t t = 0; t < rep.length(); ++t) {
        if (t != 0) {
            out << ' ';
        }
        out << (t % 2 == 0 ? '+' : '-') << "2^" << rep.exponents[t];
    }
    return out.str();
}

} // namespace hcbp
