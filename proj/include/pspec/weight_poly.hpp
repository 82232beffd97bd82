#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace pspec {

/// Exact codeword count. Punctured cosets carry multiplicities up to 2^(N-1)
/// before rank correction, so counts are unbounded integers.
using Count = boost::multiprecision::cpp_int;

struct Monomial {
    int degree = 0;
    Count count;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Truncated weight enumerator sum_w A_w X^w, keeping degrees <= w_cap.
///
/// Terms are stored sparsely in increasing degree; zero counts are never
/// stored, so the zero polynomial is the empty term list.
class WeightPoly {
public:
    explicit WeightPoly(int w_cap = 0);

    static WeightPoly constant(Count c, int w_cap);
    /// c X^degree, or the zero polynomial when degree > w_cap.
    static WeightPoly monomial(int degree, Count c, int w_cap);
    /// Builds from arbitrary (degree, count) pairs; merges duplicates, drops
    /// zeros and anything above w_cap.
    static WeightPoly from_terms(std::vector<Monomial> terms, int w_cap);

    int w_cap() const noexcept { return w_cap_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    const std::vector<Monomial>& terms() const noexcept { return terms_; }
    Count coefficient(int degree) const;
    /// Sum of all counts.
    Count total() const;

    /// Same terms, with every degree above `cap` dropped and w_cap = cap.
    WeightPoly truncated(int cap) const;

    /// (degree, decimal count) pairs in increasing degree.
    std::vector<std::pair<int, std::string>> to_pairs() const;
    static WeightPoly from_pairs(const std::vector<std::pair<int, std::string>>& pairs, int w_cap);
    std::string to_string() const;

    friend bool operator==(const WeightPoly&, const WeightPoly&) = default;

    friend WeightPoly operator+(const WeightPoly& a, const WeightPoly& b);
    WeightPoly& operator+=(const WeightPoly& b);

private:
    int w_cap_;
    std::vector<Monomial> terms_;

    friend WeightPoly mul_trunc(const WeightPoly&, const WeightPoly&, int);
    friend WeightPoly div_pow2(const WeightPoly&, unsigned);
};

/// Product with every term above w_end discarded; the result has w_cap = w_end.
WeightPoly mul_trunc(const WeightPoly& a, const WeightPoly& b, int w_end);

/// Lowest-degree term, or nothing for the zero polynomial.
std::optional<Monomial> lowest(const WeightPoly& a);

/// Divides every count by 2^k. A count that is not a multiple of 2^k means an
/// upstream bug (bad rank profile or combine rule) and throws ConsistencyError.
WeightPoly div_pow2(const WeightPoly& a, unsigned k);

struct ConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace pspec
