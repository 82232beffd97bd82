#include <doctest.h>

#include "../support/printers.hpp"

#include <random>

#include "pspec/weight_poly.hpp"

using namespace pspec;

namespace {

WeightPoly poly(std::vector<Monomial> terms, int cap) { return WeightPoly::from_terms(std::move(terms), cap); }

WeightPoly random_poly(std::mt19937_64& rng, int max_degree, int cap)
{
    std::vector<Monomial> terms;
    for (int d = 0; d <= max_degree; ++d)
        if (rng() % 2)
            terms.push_back({d, Count(rng() % 1000)});
    return poly(terms, cap);
}

// Schoolbook product over dense arrays, then truncation.
WeightPoly dense_product(const WeightPoly& a, const WeightPoly& b, int w_end)
{
    std::vector<Count> acc(static_cast<std::size_t>(a.w_cap() + b.w_cap() + 1));
    for (const auto& x : a.terms())
        for (const auto& y : b.terms())
            acc[static_cast<std::size_t>(x.degree + y.degree)] += x.count * y.count;
    std::vector<Monomial> terms;
    for (std::size_t d = 0; d < acc.size(); ++d)
        terms.push_back({static_cast<int>(d), acc[d]});
    return poly(terms, w_end);
}

} // namespace

TEST_CASE("wp_add")
{
    const auto a = poly({{0, 1}, {2, 2}}, 2);
    CHECK(a + WeightPoly::monomial(2, 4, 2) == poly({{0, 1}, {2, 6}}, 2));
    CHECK(a + WeightPoly(2) == a);
    CHECK(WeightPoly::monomial(3, 1, 3) + WeightPoly::monomial(3, 1, 3) == WeightPoly::monomial(3, 2, 3));
    CHECK_THROWS(a + WeightPoly(3));
}

TEST_CASE("wp_mul_trunc")
{
    const auto one_x2 = poly({{0, 1}, {2, 1}}, 4);
    CHECK(mul_trunc(one_x2, one_x2, 2) == poly({{0, 1}, {2, 2}}, 2));
    CHECK(mul_trunc(WeightPoly::monomial(1, 2, 2), WeightPoly::monomial(1, 2, 2), 2) == WeightPoly::monomial(2, 4, 2));
    CHECK(mul_trunc(one_x2, WeightPoly::constant(1, 4), 4) == one_x2);
    CHECK(mul_trunc(one_x2, WeightPoly(4), 4).is_zero());
}

TEST_CASE("wp_mul_trunc agrees with dense convolution, commutes and associates")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const int w = static_cast<int>(rng() % 12);
        const auto a = random_poly(rng, 8, 8), b = random_poly(rng, 8, 8), c = random_poly(rng, 8, 8);
        REQUIRE(mul_trunc(a, b, w) == dense_product(a, b, w));
        REQUIRE(mul_trunc(a, b, w) == mul_trunc(b, a, w));
        REQUIRE(mul_trunc(mul_trunc(a, b, w), c, w) == mul_trunc(a, mul_trunc(b, c, w), w));
        const auto la = lowest(a), lb = lowest(b), lab = lowest(mul_trunc(a, b, w));
        if (la && lb && la->degree + lb->degree <= w)
            REQUIRE((lab && lab->degree == la->degree + lb->degree));
    }
}

TEST_CASE("wp_lowest")
{
    CHECK(lowest(poly({{2, 4}, {5, 7}}, 5)) == Monomial{2, 4});
    CHECK(lowest(poly({{0, 1}, {2, 2}}, 2)) == Monomial{0, 1});
    CHECK(!lowest(WeightPoly(3)));
}

TEST_CASE("wp_div_pow2")
{
    CHECK(div_pow2(poly({{0, 4}, {2, 8}}, 2), 2) == poly({{0, 1}, {2, 2}}, 2));
    CHECK(div_pow2(WeightPoly::monomial(2, 16, 2), 2) == WeightPoly::monomial(2, 4, 2));
    const auto a = poly({{1, 3}, {4, 5}}, 4);
    CHECK(div_pow2(a, 0) == a);
    CHECK_THROWS_AS(div_pow2(a, 1), ConsistencyError);
}

TEST_CASE("invariants: sparse storage, caps and ordering")
{
    const auto p = poly({{3, 0}, {1, 2}, {1, 3}, {9, 1}}, 5);
    REQUIRE(p.terms().size() == 1);
    CHECK(p.terms()[0] == Monomial{1, 5});
    CHECK(WeightPoly::monomial(6, 1, 5).is_zero());
    CHECK(poly({{0, 1}, {3, 2}, {5, 1}}, 5).truncated(3) == poly({{0, 1}, {3, 2}}, 3));
}

TEST_CASE("counts beyond 2^128 stay exact")
{
    const Count big = Count(1) << 200;
    const auto a = poly({{0, big + 1}, {1, big}}, 4);
    const auto sq = mul_trunc(a, a, 4);
    CHECK(sq.coefficient(0) == (big + 1) * (big + 1));
    CHECK(sq.coefficient(1) == 2 * big * (big + 1));
    CHECK(sq.coefficient(2) == big * big);
    CHECK(sq.coefficient(2) == Count(1) << 400);
    const auto halved = div_pow2(WeightPoly::monomial(2, Count(3) << 300, 4), 300);
    CHECK(halved.coefficient(2) == 3);
    CHECK_THROWS_AS(div_pow2(WeightPoly::monomial(2, (Count(3) << 300) + 1, 4), 1), ConsistencyError);
}

TEST_CASE("decimal serialization round-trips")
{
    const Count big = (Count(1) << 300) + 12345;
    const auto p = poly({{0, 1}, {7, big}}, 10);
    const auto pairs = p.to_pairs();
    REQUIRE(pairs.size() == 2);
    CHECK(pairs[1].second == big.str());
    CHECK(WeightPoly::from_pairs(pairs, 10) == p);
}
