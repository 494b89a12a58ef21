#pragma once

// Alternating binary representation (ABR):
//   n = 2^{a_1} - 2^{a_2} + 2^{a_3} - ... +/- 2^{a_l}
// with a_1 > a_2 > ... > a_{l-1} > a_l + 1. Every n >= 1 has exactly one.

#include <stdexcept>
#include <string>
#include <vector>

#include "hcbp/types.hpp"

namespace hcbp {

/// Exponent list of an ABR. The sign of term t (0-based) is + for even t.
struct AbrRep {
    std::vector<unsigned> exponents;

    std::size_t length() const noexcept { return exponents.size(); }

    friend bool operator==(const AbrRep&, const AbrRep&) = default;
};

/// Raised by abr_value when the exponent chain is malformed. position() is the
/// 0-based index of the term whose relation to its predecessor fails, or 0 for
/// an empty list.
class AbrChainError : public std::invalid_argument {
public:
    AbrChainError(const std::string& what, std::size_t position)
        : std::invalid_argument(what), position_(position)
    {
    }
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Top-down construction: a_1 = ceil(lg n), tail = ABR of 2^{a_1} - n.
AbrRep abr_greedy(Index n);

/// Bottom-up construction from the maximal runs of 1s in binary n: each run
/// 2^a + ... + 2^b becomes 2^{a+1} - 2^b, except a lowest run of length one.
AbrRep abr_runs(Index n);

/// Validates the chain and evaluates the alternating sum.
Index abr_value(const AbrRep& rep);

/// Non-throwing chain check.
bool abr_valid(const AbrRep& rep) noexcept;

/// "+2^4 -2^2 +2^0"
std::string abr_format(const AbrRep& rep);

} // namespace hcbp
