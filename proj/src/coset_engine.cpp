#include "pspec/coset_engine.hpp"

#include <stdexcept>
#include <string>

namespace pspec {

PolyMessage leaf_init(bool p, LeafStatus status, int w_end)
{
    return leaf_message(TruncatedAlgebra{w_end}, p, status);
}

PolyMessage check_combine(const PolyMessage& a, const PolyMessage& b, int w_end)
{
    return check_message(TruncatedAlgebra{w_end}, a, b);
}

PolyMessage var_combine(const PolyMessage& a, const PolyMessage& b, int w_end)
{
    return var_message(TruncatedAlgebra{w_end}, a, b);
}

unsigned rank_correction(const CodeSpec& spec, int i)
{
    if (spec.mode() != RateMode::punctured)
        return 0;
    const int k = spec.ranks()->deficiency(i);
    if (k < 0)
        throw ConsistencyError("rank profile reports more rank than rows at stage " + std::to_string(i));
    return static_cast<unsigned>(k);
}

namespace {

void validate(const CodeSpec& spec, const BitVector& u_prefix, int w_end)
{
    if (u_prefix.empty() || u_prefix.size() > static_cast<std::size_t>(spec.length()))
        throw std::invalid_argument("coset prefix length must lie in [1, N], got " + std::to_string(u_prefix.size()));
    if (w_end < 0 || w_end > spec.restricted_length())
        throw std::invalid_argument("w_end must lie in [0, " + std::to_string(spec.restricted_length()) + "], got " +
                                    std::to_string(w_end));
}

std::vector<std::uint8_t> head_bits(const BitVector& u, std::size_t len)
{
    std::vector<std::uint8_t> bits(len);
    for (std::size_t j = 0; j < len; ++j)
        bits[j] = u.get(j);
    return bits;
}

template <class Alg>
Message<typename Alg::value_type> root_message(const Alg& alg, const CodeSpec& spec, const BitVector& u, std::size_t len)
{
    const auto inputs = head_bits(u, len);
    return node_message(alg, std::span<const LeafStatus>(spec.leaf_statuses()), spec.n(), 0, 0, inputs);
}

} // namespace

PolyMessage coset_pair_message(const CodeSpec& spec, const BitVector& u_head, int w_end)
{
    if (u_head.size() >= static_cast<std::size_t>(spec.length()))
        throw std::invalid_argument("coset_pair_message: head must be shorter than N");
    return root_message(TruncatedAlgebra{w_end}, spec, u_head, u_head.size());
}

WeightPoly evaluate_coset(const CosetQuery& q)
{
    const int w_end = q.effective_w_end();
    validate(q.spec, q.u_prefix, w_end);
    const std::size_t i = q.u_prefix.size() - 1;
    const bool last = q.u_prefix.get(i);
    const unsigned k = rank_correction(q.spec, static_cast<int>(i));

    if (q.semantics == CosetSemantics::rwef) {
        const auto msg = root_message(TruncatedAlgebra{w_end}, q.spec, q.u_prefix, i);
        return div_pow2(msg[last], k);
    }
    const auto msg = root_message(LowestAlgebra{w_end}, q.spec, q.u_prefix, i);
    const auto& term = msg[last];
    if (!term)
        return WeightPoly(w_end);
    return div_pow2(WeightPoly::monomial(term->degree, term->count, w_end), k);
}

WeightPoly coset_rwef(const CodeSpec& spec, const BitVector& u_prefix, std::optional<int> w_end)
{
    return evaluate_coset({spec, u_prefix, w_end, CosetSemantics::rwef});
}

std::optional<Monomial> coset_mwef(const CodeSpec& spec, const BitVector& u_prefix, std::optional<int> w_end)
{
    return lowest(evaluate_coset({spec, u_prefix, w_end, CosetSemantics::mwef}));
}

std::optional<int> coset_min_weight(const CodeSpec& spec, const BitVector& u_prefix, std::optional<int> w_end)
{
    const int cap = w_end.value_or(spec.restricted_length());
    validate(spec, u_prefix, cap);
    const std::size_t i = u_prefix.size() - 1;
    const DegreeAlgebra alg(cap);
    const auto msg = root_message(alg, spec, u_prefix, i);
    const int w = msg[u_prefix.get(i)];
    if (w > cap)
        return std::nullopt;
    return w;
}

} // namespace pspec
