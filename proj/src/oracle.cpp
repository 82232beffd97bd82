#include "pspec/oracle.hpp"

#include <bit>
#include <map>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace pspec {

namespace {

void check_limits(const OracleLimits& limits, int free_bits)
{
    if (limits.max_free_bits < 0 || limits.max_free_bits > 30)
        throw std::invalid_argument("oracle: max_free_bits must lie in [0, 30]");
    if (free_bits > limits.max_free_bits)
        throw OracleLimitExceeded("oracle: " + std::to_string(free_bits) + " free bits exceed the limit of " +
                                  std::to_string(limits.max_free_bits));
}

// Keeps the non-pattern coordinates; nullopt when a shortened coordinate is set.
std::optional<BitVector> restrict_word(const CodeSpec& spec, const BitVector& x)
{
    const auto& status = spec.leaf_statuses();
    BitVector out(static_cast<std::size_t>(spec.restricted_length()));
    std::size_t k = 0;
    for (std::size_t c = 0; c < x.size(); ++c) {
        switch (status[c]) {
        case LeafStatus::normal:
            out.set(k++, x.get(c));
            break;
        case LeafStatus::punctured:
            break;
        case LeafStatus::shortened:
            if (x.get(c))
                return std::nullopt;
            break;
        }
    }
    return out;
}

WeightPoly histogram(const std::map<int, Count>& counts, int cap)
{
    std::vector<Monomial> terms;
    for (const auto& [w, c] : counts)
        terms.push_back({w, c});
    return WeightPoly::from_terms(std::move(terms), cap);
}

} // namespace

std::vector<BitVector> dense_generator(int n)
{
    if (n < 0 || n > 12)
        throw std::invalid_argument("dense_generator: n must lie in [0, 12]");
    std::vector<std::vector<std::uint8_t>> g{{1}};
    for (int level = 0; level < n; ++level) {
        const std::size_t m = g.size();
        std::vector<std::vector<std::uint8_t>> next(2 * m, std::vector<std::uint8_t>(2 * m, 0));
        // [g 0; g g]
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t c = 0; c < m; ++c) {
                next[r][c] = g[r][c];
                next[m + r][c] = g[r][c];
                next[m + r][m + c] = g[r][c];
            }
        g = std::move(next);
    }
    std::vector<BitVector> rows;
    rows.reserve(g.size());
    for (const auto& row : g)
        rows.push_back(BitVector::from_bits(row));
    return rows;
}

WeightPoly brute_coset(const CodeSpec& spec, const BitVector& u_prefix, const OracleLimits& limits)
{
    const int N = spec.length();
    const int len = static_cast<int>(u_prefix.size());
    if (len < 1 || len > N)
        throw std::invalid_argument("brute_coset: prefix length must lie in [1, N]");
    const int free_bits = N - len;
    check_limits(limits, free_bits);
    const auto G = dense_generator(spec.n());

    BitVector x(static_cast<std::size_t>(N));
    for (int r = 0; r < len; ++r)
        if (u_prefix.get(static_cast<std::size_t>(r)))
            x ^= G[static_cast<std::size_t>(r)];

    const bool distinct = spec.mode() == RateMode::punctured;
    std::unordered_set<BitVector> seen;
    std::map<int, Count> counts;
    const std::uint64_t total = std::uint64_t{1} << free_bits;
    for (std::uint64_t t = 0;; ++t) {
        if (auto word = restrict_word(spec, x)) {
            if (!distinct || seen.insert(*word).second)
                counts[static_cast<int>(word->popcount())] += 1;
        }
        if (t + 1 == total)
            break;
        // Gray code step: flip the tail bit at the lowest set bit of t+1.
        const int flip = std::countr_zero(t + 1);
        x ^= G[static_cast<std::size_t>(len + flip)];
    }
    return histogram(counts, spec.restricted_length());
}

SpectrumResult brute_spectrum(const CodeSpec& spec, int w_end, const OracleLimits& limits)
{
    const int N = spec.length();
    if (w_end < 0 || w_end > spec.restricted_length())
        throw std::invalid_argument("brute_spectrum: w_end outside [0, restricted length]");
    std::vector<int> info;
    for (int i = 0; i < N; ++i)
        if (!spec.is_frozen(i))
            info.push_back(i);
    check_limits(limits, static_cast<int>(info.size()));
    const auto G = dense_generator(spec.n());
    const int s = spec.last_stage();
    const bool distinct = spec.mode() == RateMode::punctured;

    // Group key: the information bits at positions <= s.
    std::unordered_map<std::uint64_t, std::unordered_set<BitVector>> groups;
    std::map<int, Count> counts;
    const std::uint64_t total = std::uint64_t{1} << info.size();
    for (std::uint64_t m = 0; m < total; ++m) {
        BitVector v(static_cast<std::size_t>(N));
        std::uint64_t key = 0;
        for (std::size_t k = 0; k < info.size(); ++k) {
            if ((m >> k) & 1) {
                v.set(static_cast<std::size_t>(info[k]), true);
                if (info[k] <= s)
                    key |= std::uint64_t{1} << k;
            }
        }
        BitVector x(static_cast<std::size_t>(N));
        for (int i = 0; i < N; ++i)
            if (u_bit(spec, v, i))
                x ^= G[static_cast<std::size_t>(i)];
        const auto word = restrict_word(spec, x);
        if (!word)
            continue;
        if (distinct && !groups[key].insert(*word).second)
            continue;
        counts[static_cast<int>(word->popcount())] += 1;
    }

    SpectrumResult result;
    result.w_end = w_end;
    result.spectrum = histogram(counts, N).truncated(w_end);
    return result;
}

} // namespace pspec
