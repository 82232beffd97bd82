#pragma once

#include "pspec/code_model.hpp"
#include "pspec/spectrum.hpp"
#include "pspec/weight_poly.hpp"

// Brute-force references. Nothing here goes through the coset message passing:
// the generator is expanded densely from the 2x2 kernel and every codeword is
// listed.
namespace pspec {

struct OracleLimits {
    /// Exhaustive enumeration is refused above 2^max_free_bits configurations.
    int max_free_bits = 20;
};

struct OracleLimitExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Dense G = [1 0; 1 1]^{(x)n} by repeated Kronecker expansion; rows[r][c].
std::vector<BitVector> dense_generator(int n);

/// Enumerator of the restricted coset with prefix u_prefix (all later u free).
/// Punctured cosets count distinct restricted words; otherwise one entry per
/// tail. Full degree range (w_cap = restricted length).
WeightPoly brute_coset(const CodeSpec& spec, const BitVector& u_prefix, const OracleLimits& limits = {});

/// Spectrum up to w_end by listing every valid v. Codewords are grouped by
/// their v prefix up to the last frozen stage; punctured groups count
/// distinct restricted words.
SpectrumResult brute_spectrum(const CodeSpec& spec, int w_end, const OracleLimits& limits = {});

} // namespace pspec
