#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "pspec/cli.hpp"
#include "pspec/index_io.hpp"
#include "pspec/weight_poly.hpp"

#include <unistd.h>

using namespace pspec;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir()
{
    static const fs::path dir = [] {
        auto d = fs::temp_directory_path() / ("pspec_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string write_file(const std::string& name, const std::string& body)
{
    const auto path = scratch_dir() / name;
    std::ofstream(path) << body;
    return path.string();
}

RunConfig punctured8_config()
{
    RunConfig c;
    c.n = 3;
    c.frozen_file = write_file("p8_frozen.json", "[0, 1, 2, 3, 4, 6]");
    c.mode = RateMode::punctured;
    c.bit_reversal_count = 4;
    c.w_end = 4;
    return c;
}

nlohmann::json parse(const RunOutcome& out)
{
    REQUIRE(out.exit_code == 0);
    return nlohmann::json::parse(out.report);
}

std::string strip_timing(nlohmann::json j)
{
    if (j.contains("stats"))
        j["stats"].erase("ms");
    return j.dump();
}

} // namespace

TEST_CASE("index list parsing")
{
    CHECK(parse_index_list("[3, 1, 2]") == std::vector<int>{3, 1, 2});
    CHECK(parse_index_list("# frozen\n0\n\n5  # tail\n7\n") == std::vector<int>{0, 5, 7});
    CHECK_THROWS(parse_index_list("[1, \"x\"]"));
    CHECK_THROWS(parse_index_list("1\nabc\n"));
    CHECK_THROWS(read_index_list((scratch_dir() / "missing.txt").string()));
}

TEST_CASE("spectrum report for the punctured N=8 instance")
{
    const auto j = parse(run(punctured8_config()));
    CHECK(j["spectrum"] == nlohmann::json::parse(R"([[0,"1"],[2,"2"],[4,"1"]])"));
    CHECK(j["params"]["w_end"] == 4);
    CHECK(j["params"]["mode"] == "punctured");
    CHECK(j["params"]["pattern"] == nlohmann::json::parse("[0,2,4,6]"));
    CHECK(j["stats"]["n_c"].get<std::uint64_t>() > 0);
    CHECK(j["stats"]["C"].size() == 7);
    CHECK(j["stats"].contains("ms"));
}

TEST_CASE("mindist report")
{
    RunConfig c;
    c.command = Command::mindist;
    c.n = 3;
    c.frozen_file = write_file("rm.txt", "0\n1\n2\n4\n");
    const auto j = parse(run(c));
    CHECK(j["min_distance"]["d"] == 4);
    CHECK(j["min_distance"]["count"] == "14");
}

TEST_CASE("oracle-check reports MATCH")
{
    auto c = punctured8_config();
    c.command = Command::oracle_check;
    CHECK(parse(run(c))["status"] == "MATCH");

    RunConfig pac;
    pac.command = Command::oracle_check;
    pac.n = 4;
    pac.nr_k = 8;
    pac.mode = RateMode::shortened;
    pac.bit_reversal_count = 3;
    pac.pac = "1011011";
    CHECK(parse(run(pac))["status"] == "MATCH");
}

TEST_CASE("coset report")
{
    auto c = punctured8_config();
    c.command = Command::coset;
    c.w_end = 2;
    c.prefix = "0001";
    const auto j = parse(run(c));
    CHECK(j["spectrum"] == nlohmann::json::parse(R"([[2,"4"]])"));
    CHECK(j["min_weight"] == 2);
    CHECK(j["rank_correction"] == 2);
}

TEST_CASE("identical configurations give identical reports apart from timing")
{
    RunConfig c;
    c.n = 6;
    c.nr_k = 24;
    c.mode = RateMode::shortened;
    c.random_count = 20;
    c.seed = 9;
    c.pac = "1101";
    c.w_end = 10;
    const auto a = parse(run(c)), b = parse(run(c));
    CHECK(strip_timing(a) == strip_timing(b));
}

TEST_CASE("large counts round-trip through the JSON report")
{
    RunConfig c;
    c.n = 7;
    c.nr_k = 126;
    const auto j = parse(run(c));
    Count total = 0;
    for (const auto& term : j["spectrum"]) {
        total += Count(term[1].get<std::string>());
        const std::string text = term[1].get<std::string>();
        CHECK(Count(text).str() == text);
    }
    CHECK(total == Count(1) << 126);
    CHECK(j["spectrum"][32][1].get<std::string>().size() > 30);
}

TEST_CASE("csv and file output")
{
    auto c = punctured8_config();
    c.format = OutputFormat::csv;
    c.output_path = (scratch_dir() / "out.csv").string();
    const auto out = run(c);
    REQUIRE(out.exit_code == 0);
    CHECK(out.report == "weight,count\n0,1\n2,2\n4,1\n");
    CHECK(read_text_file(c.output_path) == out.report);
}

TEST_CASE("errors give a nonzero exit and a diagnostic")
{
    auto missing = punctured8_config();
    missing.frozen_file = (scratch_dir() / "nope.json").string();
    auto out = run(missing);
    CHECK(out.exit_code != 0);
    CHECK(!out.diagnostic.empty());

    auto malformed = punctured8_config();
    malformed.frozen_file = write_file("bad.json", "[0, 1,");
    CHECK(run(malformed).exit_code != 0);

    auto inconsistent = punctured8_config();
    inconsistent.mode = RateMode::plain;
    CHECK(run(inconsistent).exit_code != 0);

    auto no_pattern = punctured8_config();
    no_pattern.bit_reversal_count.reset();
    CHECK(run(no_pattern).exit_code != 0);

    RunConfig capped;
    capped.n = 5;
    capped.nr_k = 16;
    capped.max_list = 2;
    out = run(capped);
    CHECK(out.exit_code != 0);
    CHECK(out.diagnostic.find("cap") != std::string::npos);
}

TEST_CASE("environment variable overrides the reliability file")
{
    // Reverse natural order: index 0 becomes the most reliable position.
    std::string body;
    for (int i = 1023; i >= 0; --i)
        body += std::to_string(i) + "\n";
    const auto path = write_file("reversed.txt", body);
    ::setenv("PSPEC_RELIABILITY_FILE", path.c_str(), 1);
    CHECK(default_reliability_path() == path);
    RunConfig c;
    c.n = 2;
    c.nr_k = 1;
    const auto j = parse(run(c));
    CHECK(j["params"]["frozen"] == nlohmann::json::parse("[1,2,3]"));
    ::unsetenv("PSPEC_RELIABILITY_FILE");
    CHECK(default_reliability_path() != path);
}

TEST_CASE("command-line binary")
{
    const char* exe = std::getenv("PSPEC_CLI");
    if (!exe) {
        MESSAGE("PSPEC_CLI not set; skipping the binary check");
        return;
    }
    const auto frozen = write_file("bin_frozen.json", "[0,1,2,3,4,6]");
    const auto out = (scratch_dir() / "bin.json").string();
    const std::string cmd = std::string(exe) + " spectrum --n 3 --frozen " + frozen +
                            " --mode punctured --bit-reversal 4 --w-end 4 --output " + out;
    REQUIRE(std::system(cmd.c_str()) == 0);
    const auto j = nlohmann::json::parse(read_text_file(out));
    CHECK(j["spectrum"] == nlohmann::json::parse(R"([[0,"1"],[2,"2"],[4,"1"]])"));
    const std::string bad = std::string(exe) + " spectrum --n 3 --frozen /nonexistent/file > /dev/null 2>&1";
    CHECK(std::system(bad.c_str()) != 0);
}
