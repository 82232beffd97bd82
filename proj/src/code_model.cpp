#include "pspec/code_model.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "pspec/index_io.hpp"

namespace pspec {

std::string_view to_string(RateMode mode)
{
    switch (mode) {
    case RateMode::plain: return "plain";
    case RateMode::punctured: return "punctured";
    case RateMode::shortened: return "shortened";
    }
    return "?";
}

RateMode parse_rate_mode(std::string_view text)
{
    if (text == "plain")
        return RateMode::plain;
    if (text == "punctured")
        return RateMode::punctured;
    if (text == "shortened")
        return RateMode::shortened;
    throw std::invalid_argument("unknown mode '" + std::string(text) + "' (expected plain, punctured or shortened)");
}

// PreTransform -------------------------------------------------------------

PreTransform PreTransform::identity() { return PreTransform(Identity{}); }

PreTransform PreTransform::pac(std::vector<std::uint8_t> g)
{
    if (g.empty() || g[0] != 1)
        throw std::invalid_argument("PAC generator must start with g_0 = 1");
    for (auto b : g)
        if (b > 1)
            throw std::invalid_argument("PAC generator coefficients must be 0 or 1");
    return PreTransform(Pac{std::move(g)});
}

PreTransform PreTransform::pac(std::string_view coefficients)
{
    std::vector<std::uint8_t> g;
    for (char ch : coefficients) {
        if (ch != '0' && ch != '1')
            throw std::invalid_argument("PAC coefficient string must contain only '0'/'1': '" +
                                        std::string(coefficients) + "'");
        g.push_back(ch == '1');
    }
    return pac(std::move(g));
}

PreTransform PreTransform::matrix(std::vector<BitVector> rows)
{
    const std::size_t N = rows.size();
    if (N == 0)
        throw std::invalid_argument("pre-transform matrix is empty");
    std::vector<BitVector> columns(N, BitVector(N));
    for (std::size_t j = 0; j < N; ++j) {
        if (rows[j].size() != N)
            throw std::invalid_argument("pre-transform matrix must be square");
        if (!rows[j].get(j))
            throw std::invalid_argument("pre-transform matrix must have a unit diagonal (row " + std::to_string(j) + ")");
        for (std::size_t i = 0; i < N; ++i) {
            if (!rows[j].get(i))
                continue;
            if (i < j)
                throw std::invalid_argument("pre-transform matrix must be upper triangular (row " + std::to_string(j) + ")");
            columns[i].set(j, true);
        }
    }
    return PreTransform(Matrix{std::move(columns)});
}

PreTransform PreTransform::toeplitz(const std::vector<std::uint8_t>& g, int N)
{
    if (g.empty() || g[0] != 1)
        throw std::invalid_argument("PAC generator must start with g_0 = 1");
    std::vector<BitVector> rows(static_cast<std::size_t>(N), BitVector(static_cast<std::size_t>(N)));
    for (int j = 0; j < N; ++j)
        for (std::size_t k = 0; k < g.size() && j + static_cast<int>(k) < N; ++k)
            if (g[k])
                rows[static_cast<std::size_t>(j)].set(static_cast<std::size_t>(j) + k, true);
    return matrix(std::move(rows));
}

PreTransform::Kind PreTransform::kind() const noexcept
{
    switch (impl_.index()) {
    case 1: return Kind::pac;
    case 2: return Kind::matrix;
    default: return Kind::identity;
    }
}

const std::vector<std::uint8_t>& PreTransform::coefficients() const
{
    if (auto* p = std::get_if<Pac>(&impl_))
        return p->g;
    throw std::logic_error("PreTransform::coefficients: not a PAC transform");
}

const BitVector& PreTransform::column(int i) const
{
    if (auto* m = std::get_if<Matrix>(&impl_))
        return m->columns.at(static_cast<std::size_t>(i));
    throw std::logic_error("PreTransform::column: not a matrix transform");
}

int PreTransform::dimension() const
{
    if (auto* m = std::get_if<Matrix>(&impl_))
        return static_cast<int>(m->columns.size());
    throw std::logic_error("PreTransform::dimension: not a matrix transform");
}

std::string PreTransform::describe() const
{
    switch (kind()) {
    case Kind::identity: return "identity";
    case Kind::pac: {
        std::string s = "pac:";
        for (auto b : coefficients())
            s += b ? '1' : '0';
        return s;
    }
    case Kind::matrix: return "matrix:" + std::to_string(dimension());
    }
    return "?";
}

// Capability sets ------------------------------------------------------------

namespace {

std::vector<std::uint8_t> propagate(const std::vector<std::uint8_t>& leaf, int n, int depth, int residue, RateMode mode)
{
    if (depth == n)
        return {leaf[static_cast<std::size_t>(residue)]};
    auto even = propagate(leaf, n, depth + 1, residue, mode);
    auto odd = propagate(leaf, n, depth + 1, residue + (1 << depth), mode);
    std::vector<std::uint8_t> out(even.size() * 2);
    for (std::size_t j = 0; j < even.size(); ++j) {
        const std::uint8_t any = even[j] | odd[j];
        const std::uint8_t both = even[j] & odd[j];
        // u_{2j} sees a xor b, u_{2j+1} sees b once u_{2j} is known.
        out[2 * j] = mode == RateMode::punctured ? any : both;
        out[2 * j + 1] = mode == RateMode::punctured ? both : any;
    }
    return out;
}

} // namespace

IndexSet capability_sets(int n, const IndexSet& pattern_in, RateMode mode)
{
    const int N = code_length(n);
    IndexSet pattern = normalize_index_set(pattern_in, N);
    if (pattern.empty() || mode == RateMode::plain)
        return {};
    std::vector<std::uint8_t> leaf(static_cast<std::size_t>(N), 0);
    for (int c : pattern)
        leaf[static_cast<std::size_t>(c)] = 1;
    auto state = propagate(leaf, n, 0, 0, mode);
    IndexSet out;
    for (int i = 0; i < N; ++i)
        if (state[static_cast<std::size_t>(i)])
            out.push_back(i);
    return out;
}

IndexSet bit_reversal_pattern(int n, int count, RateMode mode)
{
    const int N = code_length(n);
    if (count <= 0 || count >= N)
        throw std::out_of_range("bit_reversal_pattern: count must lie in (0, N)");
    IndexSet out;
    if (mode == RateMode::shortened) {
        for (int j = N - count; j < N; ++j)
            out.push_back(bit_reversal(j, n));
    } else {
        for (int j = 0; j < count; ++j)
            out.push_back(bit_reversal(j, n));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_upward_closed(int n, const IndexSet& pattern_in)
{
    const int N = code_length(n);
    IndexSet pattern = normalize_index_set(pattern_in, N);
    std::vector<bool> in(static_cast<std::size_t>(N), false);
    for (int c : pattern)
        in[static_cast<std::size_t>(c)] = true;
    for (int c : pattern)
        for (int b = 0; b < n; ++b)
            if (!((c >> b) & 1) && !in[static_cast<std::size_t>(c | (1 << b))])
                return false;
    return true;
}

IndexSet random_shortening_pattern(int n, int count, std::uint64_t seed)
{
    const int N = code_length(n);
    if (count < 0 || count >= N)
        throw std::out_of_range("random_shortening_pattern: count must lie in [0, N)");
    std::mt19937_64 rng(seed);
    std::vector<bool> in(static_cast<std::size_t>(N), false);
    // An index becomes eligible once all of its one-bit supersets are taken.
    auto eligible = [&](int r) {
        if (in[static_cast<std::size_t>(r)])
            return false;
        for (int b = 0; b < n; ++b)
            if (!((r >> b) & 1) && !in[static_cast<std::size_t>(r | (1 << b))])
                return false;
        return true;
    };
    IndexSet out;
    std::vector<int> frontier{N - 1};
    while (static_cast<int>(out.size()) < count) {
        std::uniform_int_distribution<std::size_t> pick(0, frontier.size() - 1);
        const std::size_t k = pick(rng);
        const int r = frontier[k];
        frontier.erase(frontier.begin() + static_cast<std::ptrdiff_t>(k));
        in[static_cast<std::size_t>(r)] = true;
        out.push_back(r);
        for (int b = 0; b < n; ++b)
            if ((r >> b) & 1) {
                const int sub = r & ~(1 << b);
                if (eligible(sub) && std::find(frontier.begin(), frontier.end(), sub) == frontier.end())
                    frontier.push_back(sub);
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

IndexSet random_pattern(int n, int count, std::uint64_t seed)
{
    const int N = code_length(n);
    if (count < 0 || count >= N)
        throw std::out_of_range("random_pattern: count must lie in [0, N)");
    std::vector<int> all(static_cast<std::size_t>(N));
    for (int i = 0; i < N; ++i)
        all[static_cast<std::size_t>(i)] = i;
    std::mt19937_64 rng(seed);
    std::shuffle(all.begin(), all.end(), rng);
    IndexSet out(all.begin(), all.begin() + count);
    std::sort(out.begin(), out.end());
    return out;
}

// CodeSpec -------------------------------------------------------------------

CodeSpec CodeSpec::build(int n, IndexSet frozen, RateMode mode, IndexSet pattern, PreTransform transform)
{
    if (n < 1 || n > 10)
        throw std::out_of_range("CodeSpec: n must lie in [1, 10]");
    CodeSpec spec;
    spec.n_ = n;
    const int N = spec.length();
    spec.mode_ = mode;
    spec.frozen_ = normalize_index_set(std::move(frozen), N);
    spec.pattern_ = normalize_index_set(std::move(pattern), N);
    if (mode == RateMode::plain && !spec.pattern_.empty())
        throw std::invalid_argument("CodeSpec: plain mode takes no pattern");
    if (mode != RateMode::plain && spec.pattern_.empty())
        throw std::invalid_argument("CodeSpec: " + std::string(to_string(mode)) + " mode needs a non-empty pattern");
    if (static_cast<int>(spec.pattern_.size()) >= N)
        throw std::invalid_argument("CodeSpec: pattern must leave at least one coordinate");
    if (transform.kind() == PreTransform::Kind::matrix && transform.dimension() != N)
        throw std::invalid_argument("CodeSpec: pre-transform matrix dimension does not match N");

    spec.derived_ = capability_sets(n, spec.pattern_, mode);
    std::set_union(spec.frozen_.begin(), spec.frozen_.end(), spec.derived_.begin(), spec.derived_.end(),
                   std::back_inserter(spec.effective_));
    spec.frozen_mask_ = BitVector(static_cast<std::size_t>(N));
    spec.derived_mask_ = BitVector(static_cast<std::size_t>(N));
    for (int i : spec.effective_)
        spec.frozen_mask_.set(static_cast<std::size_t>(i), true);
    for (int i : spec.derived_)
        spec.derived_mask_.set(static_cast<std::size_t>(i), true);
    spec.last_stage_ = spec.effective_.empty() ? 0 : spec.effective_.back();
    spec.transform_ = std::move(transform);

    const LeafStatus marked = mode == RateMode::punctured ? LeafStatus::punctured : LeafStatus::shortened;
    spec.statuses_.assign(static_cast<std::size_t>(N), LeafStatus::normal);
    for (int c : spec.pattern_)
        spec.statuses_[static_cast<std::size_t>(c)] = marked;
    if (mode == RateMode::punctured)
        spec.ranks_ = std::make_shared<const RankProfile>(rank_profile(n, spec.pattern_));
    return spec;
}

bool u_bit(const CodeSpec& spec, const BitVector& v, int i)
{
    if (i < 0 || i >= spec.length())
        throw std::out_of_range("u_bit: stage outside [0, N)");
    if (v.size() < static_cast<std::size_t>(i) + 1)
        throw std::invalid_argument("u_bit: v prefix shorter than i+1");
    if (spec.mode() == RateMode::shortened && spec.is_derived(i))
        return false;
    const auto& T = spec.pre_transform();
    switch (T.kind()) {
    case PreTransform::Kind::identity:
        return v.get(static_cast<std::size_t>(i));
    case PreTransform::Kind::pac: {
        const auto& g = T.coefficients();
        bool acc = false;
        for (std::size_t j = 0; j < g.size() && j <= static_cast<std::size_t>(i); ++j)
            acc ^= g[j] && v.get(static_cast<std::size_t>(i) - j);
        return acc;
    }
    case PreTransform::Kind::matrix:
        return v.dot(T.column(i), static_cast<std::size_t>(i) + 1);
    }
    return false;
}

BitVector transform_input(const CodeSpec& spec, const BitVector& v)
{
    if (v.size() != static_cast<std::size_t>(spec.length()))
        throw std::invalid_argument("transform_input: v must have length N");
    BitVector u(v.size());
    for (int i = 0; i < spec.length(); ++i)
        u.set(static_cast<std::size_t>(i), u_bit(spec, v, i));
    return u;
}

BitVector encode(const CodeSpec& spec, const BitVector& v)
{
    if (v.size() != static_cast<std::size_t>(spec.length()))
        throw std::invalid_argument("encode: v must have length N");
    for (int j : spec.effective_frozen())
        if (v.get(static_cast<std::size_t>(j)))
            throw std::invalid_argument("encode: v sets frozen position " + std::to_string(j));
    const BitVector x = prefix_image(transform_input(spec, v), spec.n());
    BitVector out(static_cast<std::size_t>(spec.restricted_length()));
    std::size_t k = 0, p = 0;
    const auto& pattern = spec.pattern();
    for (int c = 0; c < spec.length(); ++c) {
        if (p < pattern.size() && pattern[p] == c) {
            ++p;
            if (spec.mode() == RateMode::shortened && x.get(static_cast<std::size_t>(c)))
                throw std::domain_error("encode: shortened coordinate " + std::to_string(c) +
                                        " is nonzero; pattern and pre-transform are incompatible");
            continue;
        }
        out.set(k++, x.get(static_cast<std::size_t>(c)));
    }
    return out;
}

// Reliability-based frozen sets ---------------------------------------------

std::vector<int> load_reliability_sequence(const std::string& path)
{
    auto seq = read_index_list(path);
    std::vector<int> sorted = seq;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != static_cast<int>(i))
            throw std::invalid_argument("reliability sequence in " + path + " is not a permutation of 0..M-1");
    return seq;
}

IndexSet frozen_from_reliability(const std::vector<int>& sequence, int n, int K, const IndexSet& excluded, int prefreeze)
{
    const int N = code_length(n);
    if (K < 0 || K > N)
        throw std::out_of_range("frozen_from_reliability: K outside [0, N]");
    std::vector<bool> blocked(static_cast<std::size_t>(N), false);
    for (int i : excluded)
        blocked.at(static_cast<std::size_t>(i)) = true;
    for (int i = 0; i < std::min(prefreeze, N); ++i)
        blocked[static_cast<std::size_t>(i)] = true;

    std::vector<bool> info(static_cast<std::size_t>(N), false);
    int chosen = 0;
    for (auto it = sequence.rbegin(); it != sequence.rend() && chosen < K; ++it) {
        if (*it >= N)
            continue;
        if (blocked[static_cast<std::size_t>(*it)])
            continue;
        info[static_cast<std::size_t>(*it)] = true;
        ++chosen;
    }
    if (chosen < K)
        throw std::invalid_argument("frozen_from_reliability: only " + std::to_string(chosen) +
                                    " positions available for K = " + std::to_string(K));
    IndexSet frozen;
    for (int i = 0; i < N; ++i)
        if (!info[static_cast<std::size_t>(i)])
            frozen.push_back(i);
    return frozen;
}

int nr_puncturing_prefreeze(int N, int K, int E)
{
    if (E >= N || 16 * K > 7 * E)
        return 0;
    if (4 * E >= 3 * N)
        return static_cast<int>(std::ceil(0.75 * N - E / 2.0));
    return static_cast<int>(std::ceil(9.0 * N / 16.0 - E / 4.0));
}

} // namespace pspec
