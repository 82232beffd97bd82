#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "pspec/bit_vector.hpp"
#include "pspec/code_model.hpp"
#include "pspec/weight_poly.hpp"

namespace pspec {

/// A candidate prefix: v_0..v_i and the u_0..u_i it induces.
struct PrefixEntry {
    BitVector v_bits;
    BitVector u_bits;
};

struct SpectrumStats {
    /// n_c: cosets whose minimum weight was evaluated, summed over stages.
    std::uint64_t cosets_evaluated = 0;
    /// C_i for i = 0..s: cosets evaluated at stage i.
    std::vector<std::uint64_t> stage_counts;
    /// Cosets discarded because w* > w_end.
    std::uint64_t pruned = 0;
    /// Final-stage cosets whose enumerator was summed.
    std::uint64_t survivors = 0;
    double wall_ms = 0.0;
};

struct SpectrumResult {
    /// sum_w A_w X^w for w <= w_end.
    WeightPoly spectrum;
    int w_end = 0;
    SpectrumStats stats;
};

struct EnumerationOptions {
    /// Discard cosets with w* > w_end. Disabling keeps every prefix and is
    /// only practical for small codes.
    bool prune = true;
    unsigned threads = 1;
    /// Hard cap on C_i for any stage; 0 disables the guard.
    std::uint64_t max_list_size = 0;
};

struct ListCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Partial weight spectrum A_w, w <= w_end, of the code described by `spec`.
///
/// Prefixes are extended stage by stage up to s = last_stage(); a prefix whose
/// coset has minimum weight above w_end cannot contain a codeword of weight
/// <= w_end and is dropped together with all of its extensions. At stage s the
/// enumerators of the surviving cosets are summed. Traversal is depth-first in
/// lexicographic v order, which evaluates exactly the cosets a stage-by-stage
/// list would.
SpectrumResult enumerate_spectrum(const CodeSpec& spec, int w_end, const EnumerationOptions& options = {});

struct MinDistance {
    int distance = 0;
    Count count;
};

/// Smallest nonzero weight and its multiplicity. Doubles w_end from 4 until a
/// nonzero weight shows up.
MinDistance find_min_distance(const CodeSpec& spec, const EnumerationOptions& options = {});

} // namespace pspec
