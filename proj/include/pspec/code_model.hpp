#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pspec/bit_vector.hpp"
#include "pspec/gf2.hpp"

namespace pspec {

enum class RateMode { plain, punctured, shortened };

std::string_view to_string(RateMode mode);
RateMode parse_rate_mode(std::string_view text);

/// How a codeword coordinate enters the weight count.
enum class LeafStatus : std::uint8_t { normal, punctured, shortened };

/// Invertible upper-triangular map u = v T applied ahead of the polar transform.
class PreTransform {
public:
    enum class Kind { identity, pac, matrix };

    static PreTransform identity();
    /// Convolution u_i = sum_j g_j v_{i-j}; g[0] must be 1.
    static PreTransform pac(std::vector<std::uint8_t> g);
    /// Parses a coefficient string such as "1011011".
    static PreTransform pac(std::string_view coefficients);
    /// General T given by its rows; must be upper triangular with a unit diagonal.
    static PreTransform matrix(std::vector<BitVector> rows);
    /// Banded upper-triangular Toeplitz matrix equivalent to pac(g) at length N.
    static PreTransform toeplitz(const std::vector<std::uint8_t>& g, int N);

    Kind kind() const noexcept;
    const std::vector<std::uint8_t>& coefficients() const;   // pac only
    /// Column i of T (matrix only); bit j is T[j][i].
    const BitVector& column(int i) const;
    int dimension() const;                                    // matrix only
    std::string describe() const;

private:
    struct Identity {};
    struct Pac {
        std::vector<std::uint8_t> g;
    };
    struct Matrix {
        std::vector<BitVector> columns;
    };
    std::variant<Identity, Pac, Matrix> impl_;

    explicit PreTransform(std::variant<Identity, Pac, Matrix> impl) : impl_(std::move(impl)) {}
};

/// Complete description of a (pre-transformed, rate-compatible) polar code.
/// Immutable once built; the derived sets are computed by `build`.
class CodeSpec {
public:
    static CodeSpec build(int n, IndexSet frozen, RateMode mode, IndexSet pattern,
                          PreTransform transform = PreTransform::identity());

    int n() const noexcept { return n_; }
    int length() const noexcept { return 1 << n_; }
    RateMode mode() const noexcept { return mode_; }
    const IndexSet& frozen() const noexcept { return frozen_; }
    const IndexSet& pattern() const noexcept { return pattern_; }
    /// Incapable (punctured) or overcapable (shortened) input positions.
    const IndexSet& derived_frozen() const noexcept { return derived_; }
    /// frozen() united with derived_frozen().
    const IndexSet& effective_frozen() const noexcept { return effective_; }
    bool is_frozen(int i) const { return frozen_mask_.get(static_cast<std::size_t>(i)); }
    bool is_derived(int i) const { return derived_mask_.get(static_cast<std::size_t>(i)); }
    /// Last enumeration stage: max(effective_frozen), or 0 when nothing is frozen.
    int last_stage() const noexcept { return last_stage_; }
    int dimension() const noexcept { return length() - static_cast<int>(effective_.size()); }
    /// Length after dropping the pattern coordinates (N, N_p or N_s).
    int restricted_length() const noexcept { return length() - static_cast<int>(pattern_.size()); }
    const PreTransform& pre_transform() const noexcept { return transform_; }
    const std::vector<LeafStatus>& leaf_statuses() const noexcept { return statuses_; }
    /// Present in punctured mode only.
    const RankProfile* ranks() const noexcept { return ranks_.get(); }

private:
    CodeSpec() = default;

    int n_ = 0;
    RateMode mode_ = RateMode::plain;
    IndexSet frozen_, pattern_, derived_, effective_;
    BitVector frozen_mask_, derived_mask_;
    int last_stage_ = 0;
    PreTransform transform_ = PreTransform::identity();
    std::vector<LeafStatus> statuses_;
    std::shared_ptr<const RankProfile> ranks_;
};

/// u_i for the given v. Only v[0..i] is read, so `v` may be longer than i+1.
/// In shortened mode u_i is forced to zero on the overcapable set.
bool u_bit(const CodeSpec& spec, const BitVector& v, int i);

/// Full u = v T (with the shortening override) for a length-N v.
BitVector transform_input(const CodeSpec& spec, const BitVector& v);

/// Input positions made useless by the pattern, found by propagating erasure
/// (punctured) or knowledge (shortened) from the codeword side through each
/// kernel.
IndexSet capability_sets(int n, const IndexSet& pattern, RateMode mode);

/// Punctured: bit reversals of 0..count-1. Shortened: of N-count..N-1.
IndexSet bit_reversal_pattern(int n, int count, RateMode mode);

/// True when every row index covering a pattern column (supp(c) within
/// supp(r)) is itself in the pattern. Such patterns keep x_S = 0 for every
/// input with u_S = 0.
bool is_upward_closed(int n, const IndexSet& pattern);

/// Random upward-closed pattern of `count` positions, deterministic in `seed`.
IndexSet random_shortening_pattern(int n, int count, std::uint64_t seed);
/// Uniformly random `count`-subset of [0, N).
IndexSet random_pattern(int n, int count, std::uint64_t seed);

/// Codeword of the restricted code: u = v T, x = u G, then the pattern
/// coordinates are dropped. Throws if v sets a frozen bit or, in shortened
/// mode, if x is nonzero on the pattern.
BitVector encode(const CodeSpec& spec, const BitVector& v);

/// Reliability ordering, least reliable first.
std::vector<int> load_reliability_sequence(const std::string& path);

/// Frozen set of an (N, K) code: the K most reliable positions of `sequence`
/// (restricted to [0, N)) that are neither in `excluded` nor below
/// `prefreeze` carry information; every other position is frozen.
IndexSet frozen_from_reliability(const std::vector<int>& sequence, int n, int K,
                                 const IndexSet& excluded = {}, int prefreeze = 0);

/// Extra low-index freezing applied by 5G NR rate matching for punctured codes
/// with K/E <= 7/16; returns 0 when it does not apply.
int nr_puncturing_prefreeze(int N, int K, int E);

} // namespace pspec
