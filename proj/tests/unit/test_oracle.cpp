#include <doctest.h>

#include "../support/printers.hpp"

#include <numeric>

#include "../support/instances.hpp"
#include "pspec/oracle.hpp"

using namespace pspec;

namespace {

WeightPoly poly(std::vector<Monomial> terms, int cap) { return WeightPoly::from_terms(std::move(terms), cap); }

} // namespace

TEST_CASE("dense_generator follows the support rule")
{
    const auto G = dense_generator(4);
    for (int r = 0; r < 16; ++r)
        for (int c = 0; c < 16; ++c)
            REQUIRE(G[static_cast<std::size_t>(r)].get(static_cast<std::size_t>(c)) == ((c & r) == c));
}

TEST_CASE("brute_coset examples")
{
    const auto punct = CodeSpec::build(3, {0, 1, 2, 3, 4, 6}, RateMode::punctured, {0, 2, 4, 6});
    CHECK(brute_coset(punct, BitVector::from_bits({0, 0, 0, 0})).truncated(2) == poly({{0, 1}, {2, 2}}, 2));
    CHECK(brute_coset(punct, BitVector::from_bits({0, 0, 0, 1})).truncated(2) == poly({{2, 4}}, 2));
    const auto plain = CodeSpec::build(2, {}, RateMode::plain, {});
    CHECK(brute_coset(plain, BitVector::from_bits({0, 0})) == poly({{0, 1}, {2, 2}, {4, 1}}, 4));
}

TEST_CASE("brute_spectrum examples")
{
    IndexSet all(8);
    std::iota(all.begin(), all.end(), 0);
    CHECK(brute_spectrum(CodeSpec::build(3, all, RateMode::plain, {}), 8).spectrum == WeightPoly::constant(1, 8));
    CHECK(brute_spectrum(CodeSpec::build(3, {0, 1, 2, 4}, RateMode::plain, {}), 8).spectrum ==
          poly({{0, 1}, {4, 14}, {8, 1}}, 8));
    const auto punct = CodeSpec::build(3, {0, 1, 2, 3, 4, 6}, RateMode::punctured, {0, 2, 4, 6});
    CHECK(brute_spectrum(punct, 4).spectrum == poly({{0, 1}, {2, 2}, {4, 1}}, 4));
}

TEST_CASE("limits are enforced")
{
    const auto big = CodeSpec::build(5, {}, RateMode::plain, {});
    CHECK_THROWS_AS(brute_coset(big, BitVector(4)), OracleLimitExceeded);
    CHECK_THROWS_AS(brute_spectrum(big, 4), OracleLimitExceeded);
    CHECK_THROWS_AS(brute_coset(big, BitVector(20), {.max_free_bits = 31}), std::invalid_argument);
    CHECK_NOTHROW(brute_coset(big, BitVector(28), {.max_free_bits = 4}));
}

TEST_CASE("brute_spectrum equals the sum of brute cosets over final-stage prefixes")
{
    for (int index = 0; index < 45; ++index) {
        const auto inst = testing::random_instance(808, index, 3 + index % 2, 10);
        const auto& spec = inst.spec;
        CAPTURE(inst.label);
        const int s = spec.last_stage();
        std::vector<int> info;
        for (int i = 0; i <= s; ++i)
            if (!spec.is_frozen(i))
                info.push_back(i);
        WeightPoly sum(spec.restricted_length());
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << info.size()); ++m) {
            BitVector v(static_cast<std::size_t>(spec.length()));
            for (std::size_t k = 0; k < info.size(); ++k)
                v.set(static_cast<std::size_t>(info[k]), (m >> k) & 1);
            BitVector u(static_cast<std::size_t>(s) + 1);
            for (int i = 0; i <= s; ++i)
                u.set(static_cast<std::size_t>(i), u_bit(spec, v, i));
            sum += brute_coset(spec, u);
        }
        REQUIRE(brute_spectrum(spec, spec.restricted_length()).spectrum == sum);
    }
}
