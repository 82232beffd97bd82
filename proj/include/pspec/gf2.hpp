#pragma once

#include <memory>
#include <vector>

#include "pspec/bit_vector.hpp"

// Binary linear algebra around the Arikan Kronecker power G = [1 0; 1 1]^{(x)n}.
// Rows are synthesized from the support rule: G[r][c] = 1 iff supp(c) is a
// subset of supp(r). The dense N x N matrix is never stored.
namespace pspec {

/// Sorted, duplicate-free list of indices.
using IndexSet = std::vector<int>;

/// Sorts and deduplicates; throws if any index falls outside [0, limit).
IndexSet normalize_index_set(IndexSet set, int limit);

inline int code_length(int n) { return 1 << n; }

/// Row r of the Kronecker power with n levels.
BitVector kron_row(int n, int r);

/// p = u_prefix * G, i.e. the XOR of the rows selected by u_prefix. The prefix
/// may be shorter than 2^n; missing entries count as zero.
BitVector prefix_image(const BitVector& u_prefix, int n);

/// Reverses the n-bit binary representation of j.
int bit_reversal(int j, int n);

/// ranks[i] = rank over GF(2) of rows i+1..N-1 of G restricted to the columns
/// outside `pattern`. Built once by adding rows bottom-up to an echelon basis.
class RankProfile {
public:
    RankProfile(int n, IndexSet pattern, std::vector<int> ranks);

    int n() const noexcept { return n_; }
    int length() const noexcept { return 1 << n_; }
    const IndexSet& pattern() const noexcept { return pattern_; }
    const std::vector<int>& ranks() const noexcept { return ranks_; }
    int rank_after(int i) const { return ranks_.at(static_cast<std::size_t>(i)); }

    /// Exponent k of the 2^k multiplicity that every restricted word of a coset
    /// with fixed prefix u_0..u_i carries: (N - i - 1) - ranks[i].
    int deficiency(int i) const { return (length() - i - 1) - rank_after(i); }

private:
    int n_;
    IndexSet pattern_;
    std::vector<int> ranks_;
};

RankProfile rank_profile(int n, const IndexSet& pattern);

} // namespace pspec
