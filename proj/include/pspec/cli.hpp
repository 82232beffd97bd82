#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "pspec/code_model.hpp"

namespace pspec {

enum class Command { spectrum, mindist, coset, oracle_check };
enum class OutputFormat { json, csv };

Command parse_command(std::string_view text);
std::string_view to_string(Command command);

struct RunConfig {
    Command command = Command::spectrum;
    int n = 0;

    // Frozen set: a file, or the bundled reliability sequence with K.
    std::string frozen_file;
    std::optional<int> nr_k;
    std::string nr_sequence;       // overrides PSPEC_RELIABILITY_FILE and the bundled file
    bool nr_prefreeze = false;

    RateMode mode = RateMode::plain;
    // Pattern: a file, bit-reversal with a count, or random with a count and seed.
    std::string pattern_file;
    std::optional<int> bit_reversal_count;
    std::optional<int> random_count;
    std::uint64_t seed = 1;

    std::string pac;               // coefficient string, e.g. "1011011"
    std::string matrix_file;

    std::optional<int> w_end;
    std::string prefix;            // coset command: u_0..u_i as '0'/'1'

    OutputFormat format = OutputFormat::json;
    std::string output_path;       // empty: report is returned only
    unsigned threads = 1;
    bool prune = true;
    std::uint64_t max_list = 0;
};

struct RunOutcome {
    int exit_code = 0;
    std::string report;
    std::string diagnostic;
};

/// Path of the reliability sequence used when none is given explicitly.
std::string default_reliability_path();

/// Builds the code instance a configuration describes.
CodeSpec build_spec(const RunConfig& config);

/// Runs the command. Errors become a nonzero exit code and a diagnostic; the
/// report is also written to output_path when one is set.
RunOutcome run(const RunConfig& config);

} // namespace pspec
