#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "pspec/code_model.hpp"
#include "pspec/weight_poly.hpp"

// Weight enumerators of polar cosets by message passing over the coset's
// tree-shaped factor graph.
//
// A node of the tree covers the coordinates c = r (mod 2^d) of a depth-d
// split. Its children are the even and odd subsequences; for a node with
// inputs w, the even child sees a_j = w_{2j} ^ w_{2j+1} and the odd child
// sees b_j = w_{2j+1}. A node message (theta0, theta1) enumerates the node's
// sub-coset with its next input bit fixed to 0 or 1.
namespace pspec {

template <class V>
struct Message {
    V theta0;
    V theta1;

    const V& operator[](bool bit) const { return bit ? theta1 : theta0; }
    friend bool operator==(const Message&, const Message&) = default;
};

// Algebras ---------------------------------------------------------------------
// Each algebra supplies zero / one / x (the weight-one monomial), an additive
// merge and a truncated product.

/// RWEF: polynomials truncated at w_end.
struct TruncatedAlgebra {
    using value_type = WeightPoly;
    int w_end;

    WeightPoly zero() const { return WeightPoly(w_end); }
    WeightPoly one() const { return WeightPoly::constant(1, w_end); }
    WeightPoly x() const { return WeightPoly::monomial(1, 1, w_end); }
    WeightPoly add(const WeightPoly& a, const WeightPoly& b) const { return a + b; }
    WeightPoly mul(const WeightPoly& a, const WeightPoly& b) const { return mul_trunc(a, b, w_end); }
};

/// MWEF: only the lowest-degree term survives each combine.
struct LowestAlgebra {
    using value_type = std::optional<Monomial>;
    int w_end;

    value_type zero() const { return std::nullopt; }
    value_type one() const { return Monomial{0, 1}; }
    value_type x() const { return w_end >= 1 ? value_type(Monomial{1, 1}) : std::nullopt; }
    value_type add(const value_type& a, const value_type& b) const
    {
        if (!a)
            return b;
        if (!b)
            return a;
        if (a->degree != b->degree)
            return a->degree < b->degree ? a : b;
        return Monomial{a->degree, a->count + b->count};
    }
    value_type mul(const value_type& a, const value_type& b) const
    {
        if (!a || !b || a->degree + b->degree > w_end)
            return std::nullopt;
        return Monomial{a->degree + b->degree, a->count * b->count};
    }
};

/// Lowest degree only, saturating at w_end + 1 ("above threshold"). This is the
/// degree of the MWEF without its count and drives pruning.
struct DegreeAlgebra {
    using value_type = std::uint16_t;
    std::uint16_t cap;  // w_end + 1

    explicit DegreeAlgebra(int w_end) : cap(static_cast<std::uint16_t>(w_end + 1)) {}

    value_type zero() const { return cap; }
    value_type one() const { return 0; }
    value_type x() const { return std::min<value_type>(1, cap); }
    value_type add(value_type a, value_type b) const { return std::min(a, b); }
    value_type mul(value_type a, value_type b) const
    {
        return static_cast<value_type>(std::min<int>(cap, int{a} + int{b}));
    }
};

// Message rules ------------------------------------------------------------------

/// Leaf message for a coordinate whose prefix offset is p.
template <class Alg>
Message<typename Alg::value_type> leaf_message(const Alg& alg, bool p, LeafStatus status)
{
    Message<typename Alg::value_type> m;
    switch (status) {
    case LeafStatus::normal:
        m = {alg.one(), alg.x()};
        break;
    case LeafStatus::punctured:
        m = {alg.one(), alg.one()};
        break;
    case LeafStatus::shortened:
        m = {alg.one(), alg.zero()};
        break;
    }
    if (p)
        std::swap(m.theta0, m.theta1);
    return m;
}

/// Parity-node rule: theta_c = sum_b a[c ^ b] b[b].
template <class Alg>
Message<typename Alg::value_type> check_message(const Alg& alg, const Message<typename Alg::value_type>& a,
                                                const Message<typename Alg::value_type>& b)
{
    return {alg.add(alg.mul(a.theta0, b.theta0), alg.mul(a.theta1, b.theta1)),
            alg.add(alg.mul(a.theta0, b.theta1), alg.mul(a.theta1, b.theta0))};
}

/// Variable-node rule: theta_c = a[c] b[c].
template <class Alg>
Message<typename Alg::value_type> var_message(const Alg& alg, const Message<typename Alg::value_type>& a,
                                              const Message<typename Alg::value_type>& b)
{
    return {alg.mul(a.theta0, b.theta0), alg.mul(a.theta1, b.theta1)};
}

/// Same as var_message with the components of `a` swapped when `offset` is set.
template <class Alg>
Message<typename Alg::value_type> var_message(const Alg& alg, const Message<typename Alg::value_type>& a,
                                              const Message<typename Alg::value_type>& b, bool offset)
{
    return {alg.mul(a[offset], b.theta0), alg.mul(a[!offset], b.theta1)};
}

using PolyMessage = Message<WeightPoly>;

PolyMessage leaf_init(bool p, LeafStatus status, int w_end);
PolyMessage check_combine(const PolyMessage& a, const PolyMessage& b, int w_end);
PolyMessage var_combine(const PolyMessage& a, const PolyMessage& b, int w_end);

// Node evaluation ---------------------------------------------------------------

/// Message of node (depth, residue) whose first inputs.size() inputs are fixed.
/// Mirrors the recursive even/odd factorization of the Kronecker power.
template <class Alg>
Message<typename Alg::value_type> node_message(const Alg& alg, std::span<const LeafStatus> statuses, int n,
                                               int depth, int residue, std::span<const std::uint8_t> inputs)
{
    if (depth == n)
        return leaf_message(alg, false, statuses[static_cast<std::size_t>(residue)]);
    const std::size_t t = inputs.size();
    const std::size_t m = t / 2;
    std::vector<std::uint8_t> a(m), b(m);
    for (std::size_t j = 0; j < m; ++j) {
        a[j] = inputs[2 * j] ^ inputs[2 * j + 1];
        b[j] = inputs[2 * j + 1];
    }
    const auto even = node_message(alg, statuses, n, depth + 1, residue, a);
    const auto odd = node_message(alg, statuses, n, depth + 1, residue + (1 << depth), b);
    if (t % 2 == 0)
        return check_message(alg, even, odd);
    return var_message(alg, even, odd, inputs[t - 1] != 0);
}

// Coset queries --------------------------------------------------------------------

enum class CosetSemantics { rwef, mwef };

struct CosetQuery {
    const CodeSpec& spec;
    BitVector u_prefix;               // u_0..u_i, length i+1 >= 1
    std::optional<int> w_end;         // defaults to the restricted length
    CosetSemantics semantics = CosetSemantics::rwef;

    int effective_w_end() const { return w_end.value_or(spec.restricted_length()); }
};

/// RWEF (or, for mwef semantics, the single lowest term) of the restricted
/// coset, counting distinct restricted words. Punctured counts are divided by
/// the rank deficiency of the punctured tail rows.
WeightPoly evaluate_coset(const CosetQuery& q);

/// Truncated weight enumerator of the coset.
WeightPoly coset_rwef(const CodeSpec& spec, const BitVector& u_prefix, std::optional<int> w_end = std::nullopt);

/// Lowest term of the coset's enumerator with its rank-corrected count, or
/// nothing when the coset is empty or every word is heavier than w_end.
std::optional<Monomial> coset_mwef(const CodeSpec& spec, const BitVector& u_prefix,
                                   std::optional<int> w_end = std::nullopt);

/// Minimum weight w* of the coset. Nothing means the coset is empty (possible
/// only when shortening) or, with an explicit w_end, that w* > w_end.
std::optional<int> coset_min_weight(const CodeSpec& spec, const BitVector& u_prefix,
                                    std::optional<int> w_end = std::nullopt);

/// Root message before fixing u_i: both sibling cosets (u_i = 0 and u_i = 1)
/// for a prefix u_0..u_{i-1}, without rank correction.
PolyMessage coset_pair_message(const CodeSpec& spec, const BitVector& u_head, int w_end);

/// Power of two dividing every count of a punctured coset with prefix length i+1.
unsigned rank_correction(const CodeSpec& spec, int i);

} // namespace pspec
