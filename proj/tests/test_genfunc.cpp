#include <doctest.h>

#include <stdexcept>

#include "hcbp/genfunc.hpp"
#include "hcbp/partitions.hpp"

using namespace hcbp;

TEST_SUITE("genfunc")
{
TEST_CASE("c_i_indicator")
{
    CHECK(c_i_indicator(1, 6) == 1);
    CHECK(c_i_indicator(1, 4) == 0);
    CHECK(c_i_indicator(3, 7) == 1);
    for (Index n = 0; n < 100; ++n) {
        CHECK(c_i_indicator(0, n) == 1);
    }
    CHECK(c_i_indicator(100, kMaxIndex) == 0);
}

TEST_CASE("c_via_slices")
{
    CHECK(c_via_slices(0) == 1);
    CHECK(c_via_slices(6) == 3);
    CHECK(c_via_slices(7) == 2);
    for (Index n = 0; n <= 5000; ++n) {
        REQUIRE(c_via_slices(n) == c_count(n));
    }
}

TEST_CASE("expand_h low coefficients")
{
    const auto h = expand_h(9);
    CHECK(h.coeffs == std::vector<std::uint64_t>{0, 0, 1, 1, 1, 2, 2, 1, 1});
    CHECK(expand_h(14)[13] == 2);
    CHECK(expand_h(1).coeffs == std::vector<std::uint64_t>{0});
}

TEST_CASE("first slice is x^2 / (1 - x^4)")
{
    const auto slice = expand_slice(1, 200);
    for (std::size_t n = 0; n < 200; ++n) {
        CHECK(slice[n] == (n % 4 == 2 ? 1U : 0U));
    }
}

TEST_CASE("every slice expansion matches its indicator")
{
    for (unsigned i = 1; i <= 9; ++i) {
        const auto slice = expand_slice(i, 3000);
        for (std::size_t n = 0; n < 3000; ++n) {
            REQUIRE(slice[n] == c_i_indicator(i, n));
        }
    }
}

TEST_CASE("expand_c")
{
    const auto c = expand_c(2);
    CHECK(c.coeffs == std::vector<std::uint64_t>{1, 1});
    const auto wide = expand_c(pow2(12) + 1);
    CHECK(wide[0] == 1);
    CHECK(wide[5] == 3);
    for (unsigned k = 1; k <= 12; ++k) {
        CHECK(wide[pow2(k)] == 2);
    }
}

TEST_CASE("series coefficients equal h and c")
{
    const std::size_t order = 5000;
    const auto h = expand_h(order);
    const auto c = expand_c(order);
    for (Index n = 0; n < order; ++n) {
        REQUIRE(h[n] == h_enum(n));
        REQUIRE(c[n] == c_count(n));
    }
}

TEST_CASE("order must be positive")
{
    CHECK_THROWS_AS(expand_h(0), std::invalid_argument);
    CHECK_THROWS_AS(expand_c(0), std::invalid_argument);
    CHECK_THROWS_AS(expand_slice(0, 10), std::invalid_argument);
}
}
