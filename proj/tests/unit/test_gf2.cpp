#include <doctest.h>

#include "../support/printers.hpp"

#include <random>

#include "pspec/gf2.hpp"
#include "pspec/oracle.hpp"

using namespace pspec;

namespace {

// Rank of a list of rows by plain Gaussian elimination on byte vectors.
int dense_rank(std::vector<std::vector<std::uint8_t>> rows)
{
    int rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
        std::size_t pivot = static_cast<std::size_t>(rank);
        while (pivot < rows.size() && !rows[pivot][c])
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[pivot], rows[static_cast<std::size_t>(rank)]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != static_cast<std::size_t>(rank) && rows[r][c])
                for (std::size_t k = 0; k < cols; ++k)
                    rows[r][k] ^= rows[static_cast<std::size_t>(rank)][k];
        ++rank;
    }
    return rank;
}

} // namespace

TEST_CASE("kron_row examples")
{
    CHECK(kron_row(3, 0).to_string() == "10000000");
    CHECK(kron_row(3, 7).to_string() == "11111111");
    CHECK(kron_row(3, 5).to_string() == "11001100");
    CHECK_THROWS_AS(kron_row(3, 8), std::out_of_range);
    CHECK_THROWS_AS(kron_row(3, -1), std::out_of_range);
}

TEST_CASE("kron_row matches the expanded Kronecker power")
{
    for (int n = 0; n <= 6; ++n) {
        const auto G = dense_generator(n);
        for (int r = 0; r < (1 << n); ++r)
            REQUIRE(kron_row(n, r) == G[static_cast<std::size_t>(r)]);
    }
}

TEST_CASE("prefix_image examples")
{
    CHECK(prefix_image(BitVector::from_bits({0, 0, 0}), 3).to_string() == "00000000");
    CHECK(prefix_image(BitVector::from_bits({1}), 1).to_string() == "10");
    CHECK(prefix_image(BitVector::from_bits({1, 1}), 2).to_string() == "0100");
    CHECK_THROWS_AS(prefix_image(BitVector(5), 2), std::invalid_argument);
}

TEST_CASE("prefix_image equals u times G")
{
    std::mt19937_64 rng(3);
    for (int n = 1; n <= 6; ++n) {
        const int N = 1 << n;
        const auto G = dense_generator(n);
        for (int trial = 0; trial < 20; ++trial) {
            const std::size_t len = rng() % static_cast<std::size_t>(N) + 1;
            BitVector u(len), expect(static_cast<std::size_t>(N));
            for (std::size_t j = 0; j < len; ++j)
                if (rng() & 1) {
                    u.set(j, true);
                    expect ^= G[j];
                }
            REQUIRE(prefix_image(u, n) == expect);
        }
    }
}

TEST_CASE("bit_reversal")
{
    CHECK(bit_reversal(3, 3) == 6);
    CHECK(bit_reversal(14, 4) == 7);
    CHECK(bit_reversal(0, 5) == 0);
    for (int n = 1; n <= 8; ++n)
        for (int j = 0; j < (1 << n); ++j)
            REQUIRE(bit_reversal(bit_reversal(j, n), n) == j);
    CHECK_THROWS_AS(bit_reversal(8, 3), std::out_of_range);
}

TEST_CASE("rank_profile examples")
{
    const auto rp = rank_profile(3, {0, 2, 4, 6});
    CHECK(rp.rank_after(3) == 2);
    CHECK(rp.deficiency(3) == 2);
    CHECK(rp.rank_after(7) == 0);

    for (int n = 1; n <= 6; ++n) {
        const auto full = rank_profile(n, {});
        for (int i = 0; i < (1 << n); ++i)
            REQUIRE(full.rank_after(i) == (1 << n) - i - 1);
    }
}

TEST_CASE("rank_profile matches dense elimination and its invariants")
{
    std::mt19937_64 rng(11);
    for (int n = 2; n <= 5; ++n) {
        const int N = 1 << n;
        const auto G = dense_generator(n);
        for (int trial = 0; trial < 15; ++trial) {
            IndexSet pattern;
            for (int c = 0; c < N; ++c)
                if (rng() % 3 == 0)
                    pattern.push_back(c);
            const auto rp = rank_profile(n, pattern);
            const int kept = N - static_cast<int>(pattern.size());
            REQUIRE(rp.rank_after(N - 1) == 0);
            for (int i = 0; i < N; ++i) {
                std::vector<std::vector<std::uint8_t>> rows;
                for (int r = i + 1; r < N; ++r) {
                    std::vector<std::uint8_t> row;
                    for (int c = 0; c < N; ++c)
                        if (!std::binary_search(pattern.begin(), pattern.end(), c))
                            row.push_back(G[static_cast<std::size_t>(r)].get(static_cast<std::size_t>(c)));
                    rows.push_back(row);
                }
                REQUIRE(rp.rank_after(i) == dense_rank(rows));
                REQUIRE(rp.rank_after(i) <= std::min(N - i - 1, kept));
                if (i > 0) {
                    REQUIRE(rp.rank_after(i) <= rp.rank_after(i - 1));
                    REQUIRE(rp.rank_after(i - 1) <= rp.rank_after(i) + 1);
                }
            }
        }
    }
}
