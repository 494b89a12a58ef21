#include <doctest.h>

#include <random>
#include <thread>

#include "hcbp/core_sequences.hpp"
#include "oracles.hpp"

using namespace hcbp;

TEST_SUITE("core_sequences")
{
TEST_CASE("digit_sum")
{
    CHECK(digit_sum(0) == 0);
    for (unsigned k = 0; k < 63; ++k) {
        CHECK(digit_sum(pow2(k)) == 1);
    }
    CHECK(digit_sum(13) == 3);

    // Parity recursion s(n) = s((n-1)/2) + 1 for odd n, s(n/2) for even n.
    for (Index n = 1; n < 5000; ++n) {
        const unsigned expected = n % 2 == 1 ? digit_sum((n - 1) / 2) + 1 : digit_sum(n / 2);
        REQUIRE(digit_sum(n) == expected);
        REQUIRE(digit_sum(n) == oracle::bits_by_division(n));
    }
}

TEST_CASE("ceil_lg is exact at powers of two")
{
    CHECK(ceil_lg(1) == 0);
    CHECK(ceil_lg(2) == 1);
    CHECK(ceil_lg(3) == 2);
    CHECK(ceil_lg(4) == 2);
    CHECK(ceil_lg(5) == 3);
    for (unsigned k = 1; k <= 62; ++k) {
        CHECK(ceil_lg(pow2(k)) == k);
        CHECK(ceil_lg(pow2(k) + 1) == k + 1);
        CHECK(ceil_lg(pow2(k) - 1) == (k == 1 ? 0U : k));
    }
}

TEST_CASE("f on the first twelve indices")
{
    const Wide expected[12] = {0, 1, 2, 4, 5, 7, 9, 12, 13, 15, 17, 20};
    for (Index n = 1; n <= 12; ++n) {
        CHECK(f_digit(n) == expected[n - 1]);
        CHECK(f_dc(n) == expected[n - 1]);
    }
}

TEST_CASE("f_digit and f_dc against the literal digit sum")
{
    const auto table = oracle::f_table(5000);
    for (Index n = 1; n <= 5000; ++n) {
        REQUIRE(f_digit(n) == table[n]);
        REQUIRE(f_dc(n) == table[n]);
    }
    CHECK(f_dc(pow2(20)) == f_digit(pow2(20)));
    CHECK(f_digit(pow2(20)) == 10485760U); // 2^19 * 20
}

TEST_CASE("f beyond 64 bits")
{
    // Frozen from an independent per-bit count (arbitrary-precision integers).
    CHECK(to_string(f_digit(pow2(62))) == "142962266571249025024");
    CHECK(to_string(f_digit(pow2(62) - 1)) == "142962266571249024962");
    CHECK(to_string(f_digit(1000000000000000000ULL)) == "29761222783429246976");
    CHECK(to_string(f_digit(123456789012345ULL)) == "2874358342509594");
    CHECK(f_dc(pow2(62)) == f_digit(pow2(62)));
}

TEST_CASE("random large n: halving recursion = column count")
{
    std::mt19937_64 rng(0x5eed01);
    std::uniform_int_distribution<Index> dist(1, kMaxIndex);
    for (int trial = 0; trial < 2000; ++trial) {
        const Index n = dist(rng);
        REQUIRE(f_dc(n) == f_digit(n));
        REQUIRE(f_digit(n + 1) - f_digit(n) == digit_sum(n));
    }
}

TEST_CASE("HalvingMemo touches few arguments")
{
    HalvingMemo memo;
    memo(pow2(40) + 12345);
    // At most two distinct arguments per halving level.
    CHECK(memo.size() <= 2 * 41);
}

TEST_CASE("f rejects n = 0")
{
    CHECK_THROWS_AS(f_digit(0), std::invalid_argument);
    CHECK_THROWS_AS(f_dc(0), std::invalid_argument);
}

TEST_CASE("f_maximin examples")
{
    const auto two = f_maximin(2);
    CHECK(two.value == 1);
    CHECK(two.argmax == std::vector<Bipartition>{{1, 1}});

    const auto five = f_maximin(5);
    CHECK(five.value == 5);
    CHECK(five.argmax == std::vector<Bipartition>{{3, 2}, {4, 1}});

    const auto thirteen = f_maximin(13);
    CHECK(thirteen.value == f_digit(13));
    CHECK(thirteen.argmax == std::vector<Bipartition>{{7, 6}, {8, 5}});

    CHECK_THROWS_AS(f_maximin(1), std::invalid_argument);
    CHECK_THROWS_AS(f_maximin(0), std::invalid_argument);
}

TEST_CASE("maximin table against brute-force splits")
{
    const auto f = oracle::f_table(600);
    const MaximinTable table(600);
    for (Index n = 2; n <= 600; ++n) {
        const auto result = table.solve(n);
        REQUIRE(result.value == f[n]);
        const auto splits = oracle::maximizing_splits(n, f);
        REQUIRE(result.argmax.size() == splits.size());
        for (std::size_t t = 0; t < splits.size(); ++t) {
            CHECK(result.argmax[t] == Bipartition{splits[t].first, splits[t].second});
        }
        for (const auto& p : result.argmax) {
            CHECK(p.n0 + p.n1 == n);
            CHECK(p.n0 >= p.n1);
            CHECK(p.n1 >= 1);
        }
    }
    CHECK_THROWS_AS(table.value(601), std::out_of_range);
}

TEST_CASE("d examples and edge cases")
{
    for (unsigned i = 1; i <= 64; ++i) {
        CHECK(d(i, 0) == 0);
    }
    for (Index n = 0; n < 100; ++n) {
        CHECK(d(1, n) == n % 2);
    }
    CHECK(d(3, 13) == 3);
    CHECK(d(1, 13) == 1);
    CHECK(d(2, 13) == 1);
    CHECK(d(4, 13) == 3);
    CHECK(d(5, 13) == 13);
    CHECK(d(64, kMaxIndex) == kMaxIndex);
    CHECK_THROWS_AS(d(0, 5), std::invalid_argument);
}

TEST_CASE("d is the column imbalance of the binary prefix matrix")
{
    // Column for bit b (least significant = 0) of 0..n-1 has imbalance d_{b+1}(n).
    for (Index n = 1; n <= 300; ++n) {
        for (unsigned b = 0; b < 10; ++b) {
            long long zeros = 0;
            long long ones = 0;
            for (Index row = 0; row < n; ++row) {
                ((row >> b) & 1U) != 0 ? ++ones : ++zeros;
            }
            REQUIRE(d(b + 1, n) == static_cast<Index>(zeros - ones));
        }
    }
}

TEST_CASE("d laws on random large arguments")
{
    std::mt19937_64 rng(0xd1ff);
    std::uniform_int_distribution<Index> dist(0, kMaxIndex / 4);
    std::uniform_int_distribution<unsigned> index(1, 60);
    for (int trial = 0; trial < 5000; ++trial) {
        const Index n = dist(rng);
        const unsigned i = index(rng);
        REQUIRE(d(i + 1, 2 * n) == 2 * d(i, n));
        REQUIRE(d(i + 1, 2 * n + 1) == d(i, n + 1) + d(i, n));
        REQUIRE(d(i, n) <= d(i + 1, n));
        REQUIRE(d(i, n) <= std::min(n, pow2(i - 1)));
    }
}

TEST_CASE("deficit")
{
    CHECK(deficit(1).scaled == 0);
    CHECK(deficit(2).scaled == 0);
    CHECK(deficit(8).scaled == 0);
    for (unsigned k = 0; k < 60; ++k) {
        CHECK(deficit(pow2(k)).scaled == 0);
    }
    // Reference values from double-precision log2.
    CHECK(deficit(3).value() == doctest::Approx(-0.3774437510817341).epsilon(1e-8));
    CHECK(deficit(13).value() == doctest::Approx(-2.0528581679170976).epsilon(1e-8));
    CHECK(deficit(1000).value() == doctest::Approx(-50.89214233104394).epsilon(1e-8));
    for (Index n = 1; n < 2000; ++n) {
        REQUIRE(deficit(n).value() <= 0.0);
    }
}

TEST_CASE("lg_q32 is exact at powers of two and monotone")
{
    for (unsigned k = 0; k < 63; ++k) {
        CHECK(lg_q32(pow2(k)) == (std::uint64_t{k} << 32));
    }
    for (Index n = 1; n < 5000; ++n) {
        REQUIRE(lg_q32(n) < lg_q32(n + 1));
    }
}

TEST_CASE("concurrent callers see identical values")
{
    std::vector<Wide> results(8);
    std::vector<std::thread> workers;
    for (std::size_t t = 0; t < results.size(); ++t) {
        workers.emplace_back([&, t] { results[t] = f_dc(pow2(50) + 77); });
    }
    for (auto& worker : workers) {
        worker.join();
    }
    for (const auto& value : results) {
        CHECK(value == f_digit(pow2(50) + 77));
    }
}
}
