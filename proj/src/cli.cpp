#include "pspec/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pspec/coset_engine.hpp"
#include "pspec/index_io.hpp"
#include "pspec/oracle.hpp"
#include "pspec/spectrum.hpp"

#ifndef PSPEC_DEFAULT_RELIABILITY_FILE
#define PSPEC_DEFAULT_RELIABILITY_FILE "data/nr_polar_reliability.txt"
#endif

namespace pspec {

using Json = nlohmann::ordered_json;

Command parse_command(std::string_view text)
{
    if (text == "spectrum")
        return Command::spectrum;
    if (text == "mindist")
        return Command::mindist;
    if (text == "coset")
        return Command::coset;
    if (text == "oracle-check")
        return Command::oracle_check;
    throw std::invalid_argument("unknown command '" + std::string(text) + "'");
}

std::string_view to_string(Command command)
{
    switch (command) {
    case Command::spectrum:
        return "spectrum";
    case Command::mindist:
        return "mindist";
    case Command::coset:
        return "coset";
    case Command::oracle_check:
        return "oracle-check";
    }
    return "?";
}

std::string default_reliability_path()
{
    if (const char* env = std::getenv("PSPEC_RELIABILITY_FILE"); env && *env)
        return env;
    return PSPEC_DEFAULT_RELIABILITY_FILE;
}

namespace {

IndexSet resolve_pattern(const RunConfig& c)
{
    const int sources = !c.pattern_file.empty() + c.bit_reversal_count.has_value() + c.random_count.has_value();
    if (c.mode == RateMode::plain) {
        if (sources != 0)
            throw std::invalid_argument("plain mode takes no pattern");
        return {};
    }
    if (sources != 1)
        throw std::invalid_argument(std::string(to_string(c.mode)) +
                                    " mode needs exactly one of --pattern, --bit-reversal, --random-pattern");
    if (!c.pattern_file.empty())
        return read_index_list(c.pattern_file);
    if (c.bit_reversal_count)
        return bit_reversal_pattern(c.n, *c.bit_reversal_count, c.mode);
    if (c.mode == RateMode::shortened)
        return random_shortening_pattern(c.n, *c.random_count, c.seed);
    return random_pattern(c.n, *c.random_count, c.seed);
}

PreTransform resolve_transform(const RunConfig& c)
{
    if (!c.pac.empty() && !c.matrix_file.empty())
        throw std::invalid_argument("--pac and --matrix are mutually exclusive");
    if (!c.pac.empty())
        return PreTransform::pac(std::string_view(c.pac));
    if (!c.matrix_file.empty())
        return PreTransform::matrix(read_bit_matrix(c.matrix_file));
    return PreTransform::identity();
}

IndexSet resolve_frozen(const RunConfig& c, const IndexSet& pattern)
{
    if (!c.frozen_file.empty() && c.nr_k)
        throw std::invalid_argument("--frozen and --nr-k are mutually exclusive");
    if (!c.frozen_file.empty())
        return read_index_list(c.frozen_file);
    if (!c.nr_k)
        throw std::invalid_argument("a frozen set is required: --frozen FILE or --nr-k K");
    const int N = code_length(c.n);
    const auto sequence = load_reliability_sequence(c.nr_sequence.empty() ? default_reliability_path() : c.nr_sequence);
    const auto derived = capability_sets(c.n, pattern, c.mode);
    const int E = N - static_cast<int>(pattern.size());
    const int prefreeze =
        c.nr_prefreeze && c.mode == RateMode::punctured ? nr_puncturing_prefreeze(N, *c.nr_k, E) : 0;
    return frozen_from_reliability(sequence, c.n, *c.nr_k, derived, prefreeze);
}

Json spectrum_json(const WeightPoly& p)
{
    Json out = Json::array();
    for (const auto& [w, count] : p.to_pairs())
        out.push_back(Json::array({w, count}));
    return out;
}

Json stats_json(const SpectrumStats& s)
{
    return Json{{"n_c", s.cosets_evaluated},
                {"C", s.stage_counts},
                {"pruned", s.pruned},
                {"survivors", s.survivors},
                {"ms", s.wall_ms}};
}

Json params_json(const RunConfig& c, const CodeSpec& spec, int w_end)
{
    Json p{{"command", std::string(to_string(c.command))},
           {"n", spec.n()},
           {"N", spec.length()},
           {"K", spec.dimension()},
           {"mode", std::string(to_string(spec.mode()))},
           {"restricted_length", spec.restricted_length()},
           {"pattern", spec.pattern()},
           {"frozen", spec.effective_frozen()},
           {"derived_frozen", spec.derived_frozen()},
           {"pre_transform", spec.pre_transform().describe()},
           {"w_end", w_end}};
    if (c.command == Command::coset)
        p["prefix"] = c.prefix;
    return p;
}

std::string csv_spectrum(const WeightPoly& p)
{
    std::ostringstream out;
    out << "weight,count\n";
    for (const auto& [w, count] : p.to_pairs())
        out << w << ',' << count << '\n';
    return out.str();
}

struct Report {
    Json json;
    std::string csv;
    bool ok = true;
};

Report execute(const RunConfig& c)
{
    const CodeSpec spec = build_spec(c);
    const int w_end = c.w_end.value_or(spec.restricted_length());
    EnumerationOptions options;
    options.prune = c.prune;
    options.threads = std::max(1u, c.threads);
    options.max_list_size = c.max_list;

    Report r;
    r.json["params"] = params_json(c, spec, w_end);
    switch (c.command) {
    case Command::spectrum: {
        const auto result = enumerate_spectrum(spec, w_end, options);
        r.json["spectrum"] = spectrum_json(result.spectrum);
        r.json["stats"] = stats_json(result.stats);
        r.csv = csv_spectrum(result.spectrum);
        break;
    }
    case Command::mindist: {
        const auto md = find_min_distance(spec, options);
        r.json["params"].erase("w_end");
        r.json["min_distance"] = Json{{"d", md.distance}, {"count", md.count.str()}};
        r.csv = "d,count\n" + std::to_string(md.distance) + "," + md.count.str() + "\n";
        break;
    }
    case Command::coset: {
        if (c.prefix.empty())
            throw std::invalid_argument("coset command needs --prefix");
        const auto u = BitVector::from_string(c.prefix);
        const auto rwef = coset_rwef(spec, u, w_end);
        const auto w_star = coset_min_weight(spec, u, w_end);
        r.json["spectrum"] = spectrum_json(rwef);
        r.json["min_weight"] = w_star ? Json(*w_star) : Json(nullptr);
        r.json["rank_correction"] = rank_correction(spec, static_cast<int>(u.size()) - 1);
        r.csv = csv_spectrum(rwef);
        break;
    }
    case Command::oracle_check: {
        const auto result = enumerate_spectrum(spec, w_end, options);
        const auto reference = brute_spectrum(spec, w_end);
        r.ok = result.spectrum == reference.spectrum;
        const std::string status = r.ok ? "MATCH" : "MISMATCH";
        r.json["status"] = status;
        r.json["spectrum"] = spectrum_json(result.spectrum);
        r.json["oracle_spectrum"] = spectrum_json(reference.spectrum);
        r.json["stats"] = stats_json(result.stats);
        r.csv = "status\n" + status + "\n";
        break;
    }
    }
    return r;
}

} // namespace

CodeSpec build_spec(const RunConfig& c)
{
    if (c.n < 1 || c.n > 10)
        throw std::invalid_argument("--n must lie in [1, 10]");
    const auto pattern = resolve_pattern(c);
    auto frozen = resolve_frozen(c, pattern);
    return CodeSpec::build(c.n, std::move(frozen), c.mode, pattern, resolve_transform(c));
}

RunOutcome run(const RunConfig& config)
{
    RunOutcome out;
    try {
        const auto r = execute(config);
        out.report = config.format == OutputFormat::json ? r.json.dump(2) + "\n" : r.csv;
        if (!r.ok) {
            out.exit_code = 3;
            out.diagnostic = "oracle mismatch";
        }
    } catch (const ListCapExceeded& e) {
        out.exit_code = 4;
        out.diagnostic = e.what();
    } catch (const std::exception& e) {
        out.exit_code = 2;
        out.diagnostic = e.what();
    }
    if (out.exit_code != 0 && out.report.empty())
        return out;
    if (!config.output_path.empty()) {
        std::ofstream file(config.output_path, std::ios::binary);
        if (!file || !(file << out.report)) {
            out.exit_code = 2;
            out.diagnostic = "cannot write " + config.output_path;
        }
    }
    return out;
}

} // namespace pspec
