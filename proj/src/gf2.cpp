#include "pspec/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace pspec {

namespace {

void check_levels(int n)
{
    if (n < 0 || n > 20)
        throw std::out_of_range("level count n must lie in [0, 20], got " + std::to_string(n));
}

} // namespace

IndexSet normalize_index_set(IndexSet set, int limit)
{
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    if (!set.empty() && (set.front() < 0 || set.back() >= limit))
        throw std::out_of_range("index outside [0, " + std::to_string(limit) + ")");
    return set;
}

BitVector kron_row(int n, int r)
{
    check_levels(n);
    const int N = code_length(n);
    if (r < 0 || r >= N)
        throw std::out_of_range("kron_row: row index " + std::to_string(r) + " outside [0, " + std::to_string(N) + ")");
    BitVector row(static_cast<std::size_t>(N));
    // Walk every submask of r.
    for (int c = r;; c = (c - 1) & r) {
        row.set(static_cast<std::size_t>(c), true);
        if (c == 0)
            break;
    }
    return row;
}

BitVector prefix_image(const BitVector& u_prefix, int n)
{
    check_levels(n);
    const std::size_t N = static_cast<std::size_t>(code_length(n));
    if (u_prefix.size() > N)
        throw std::invalid_argument("prefix_image: prefix of length " + std::to_string(u_prefix.size()) +
                                    " exceeds code length " + std::to_string(N));
    std::vector<std::uint8_t> x(N, 0);
    for (std::size_t i = 0; i < u_prefix.size(); ++i)
        x[i] = u_prefix.get(i);
    // x_c = XOR of u_r over supersets r of c.
    for (std::size_t h = 1; h < N; h <<= 1)
        for (std::size_t j = 0; j < N; ++j)
            if (!(j & h))
                x[j] ^= x[j | h];
    return BitVector::from_bits(x);
}

int bit_reversal(int j, int n)
{
    check_levels(n);
    if (j < 0 || j >= code_length(n))
        throw std::out_of_range("bit_reversal: index " + std::to_string(j) + " outside [0, 2^" + std::to_string(n) + ")");
    int out = 0;
    for (int b = 0; b < n; ++b)
        out |= ((j >> b) & 1) << (n - 1 - b);
    return out;
}

RankProfile::RankProfile(int n, IndexSet pattern, std::vector<int> ranks)
    : n_(n), pattern_(std::move(pattern)), ranks_(std::move(ranks))
{
    if (ranks_.size() != static_cast<std::size_t>(length()))
        throw std::invalid_argument("RankProfile: ranks must have N entries");
}

RankProfile rank_profile(int n, const IndexSet& pattern_in)
{
    check_levels(n);
    const int N = code_length(n);
    IndexSet pattern = normalize_index_set(pattern_in, N);

    std::vector<int> column_of(static_cast<std::size_t>(N), -1);
    int kept = 0;
    {
        std::size_t p = 0;
        for (int c = 0; c < N; ++c) {
            if (p < pattern.size() && pattern[p] == c) {
                ++p;
                continue;
            }
            column_of[static_cast<std::size_t>(c)] = kept++;
        }
    }

    // basis[p] holds the reduced row whose lowest set column is p.
    std::vector<BitVector> basis(static_cast<std::size_t>(kept));
    std::vector<bool> occupied(static_cast<std::size_t>(kept), false);
    std::vector<int> ranks(static_cast<std::size_t>(N), 0);
    int rank = 0;

    for (int r = N - 1; r >= 1; --r) {
        BitVector row(static_cast<std::size_t>(kept));
        for (int c = r;; c = (c - 1) & r) {
            if (int k = column_of[static_cast<std::size_t>(c)]; k >= 0)
                row.set(static_cast<std::size_t>(k), true);
            if (c == 0)
                break;
        }
        while (!row.none()) {
            std::size_t lead = 0;
            for (auto words = row.words(); ; ++lead) {
                if (words[lead]) {
                    lead = lead * 64 + static_cast<std::size_t>(std::countr_zero(words[lead]));
                    break;
                }
            }
            if (!occupied[lead]) {
                basis[lead] = std::move(row);
                occupied[lead] = true;
                ++rank;
                break;
            }
            row ^= basis[lead];
        }
        ranks[static_cast<std::size_t>(r - 1)] = rank;
    }
    return RankProfile(n, std::move(pattern), std::move(ranks));
}

} // namespace pspec
