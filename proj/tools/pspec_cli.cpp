#include <iostream>

#include <CLI11.hpp>

#include "pspec/cli.hpp"

int main(int argc, char** argv)
{
    pspec::RunConfig config;
    std::string command = "spectrum", mode = "plain", format = "json";
    int nr_k = -1, bit_reversal = -1, random_count = -1, w_end = -1;

    CLI::App app{"Partial weight spectra of punctured / shortened, pre-transformed polar codes"};
    app.add_option("command", command, "spectrum | mindist | coset | oracle-check")
        ->check(CLI::IsMember({"spectrum", "mindist", "coset", "oracle-check"}));
    app.add_option("--n", config.n, "log2 of the mother code length")->required();
    app.add_option("--frozen", config.frozen_file, "frozen index list (JSON array or one index per line)");
    app.add_option("--nr-k", nr_k, "take the frozen set from the 5G reliability sequence with K information bits");
    app.add_option("--nr-sequence", config.nr_sequence, "reliability sequence file (least reliable first)");
    app.add_flag("--nr-prefreeze", config.nr_prefreeze, "apply the 5G low-index prefreeze for punctured codes");
    app.add_option("--mode", mode, "plain | punctured | shortened")
        ->check(CLI::IsMember({"plain", "punctured", "shortened"}));
    app.add_option("--pattern", config.pattern_file, "pattern index list");
    app.add_option("--bit-reversal", bit_reversal, "bit-reversal pattern with this many positions");
    app.add_option("--random-pattern", random_count, "random pattern with this many positions");
    app.add_option("--seed", config.seed, "seed for --random-pattern");
    app.add_option("--pac", config.pac, "PAC coefficients g_0 g_1 ... as a binary string");
    app.add_option("--matrix", config.matrix_file, "upper-triangular pre-transform, one row per line");
    app.add_option("--w-end", w_end, "weight threshold (default: restricted length)");
    app.add_option("--prefix", config.prefix, "coset prefix u_0..u_i for the coset command");
    app.add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--output,-o", config.output_path, "write the report here instead of stdout");
    app.add_option("--threads", config.threads, "worker threads");
    app.add_flag("!--no-prune", config.prune, "explore every prefix (small codes only)");
    app.add_option("--max-list", config.max_list, "fail when a stage evaluates more cosets than this (0: no cap)");

    CLI11_PARSE(app, argc, argv);

    try {
        config.command = pspec::parse_command(command);
        config.mode = pspec::parse_rate_mode(mode);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    config.format = format == "csv" ? pspec::OutputFormat::csv : pspec::OutputFormat::json;
    if (nr_k >= 0)
        config.nr_k = nr_k;
    if (bit_reversal >= 0)
        config.bit_reversal_count = bit_reversal;
    if (random_count >= 0)
        config.random_count = random_count;
    if (w_end >= 0)
        config.w_end = w_end;

    const auto outcome = pspec::run(config);
    if (config.output_path.empty())
        std::cout << outcome.report;
    if (outcome.exit_code != 0)
        std::cerr << "error: " << outcome.diagnostic << '\n';
    return outcome.exit_code;
}
