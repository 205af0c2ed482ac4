#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "daehee/rational.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

// Runs the CLI binary with stderr silenced, capturing stdout and exit code.
// An optional prefix of VAR=value assignments sets the child environment.
RunResult run_cli(const std::string& args, const std::string& env = "") {
    const std::string command =
        (env.empty() ? std::string() : "env " + env + " ") + "\"" + DAEHEE_CLI_PATH + "\" " + args +
        " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 4096> buffer{};
    std::size_t read = 0;
    while ((read = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        result.output.append(buffer.data(), read);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

nlohmann::json parse_output(const RunResult& result) {
    return nlohmann::json::parse(result.output);
}

}  // namespace

TEST_CASE("table daehee1 csv") {
    const RunResult r = run_cli("table daehee1 --n-max 3 --k 1 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "n,value\n0,1\n1,-1/2\n2,2/3\n3,-3/2\n");
}

TEST_CASE("table stirling1 degenerate") {
    const RunResult r = run_cli("table stirling1 --n-max 0");
    CHECK(r.exit_code == 0);
    const auto j = parse_output(r);
    CHECK(j["artifact"] == "daehee-kit");
    CHECK(j["schema_version"] == 1);
    CHECK(j["command"] == "table");
    REQUIRE(j["entries"].size() == 1);
    CHECK(j["entries"][0]["value"] == "1");
}

TEST_CASE("table stirling triangle") {
    const RunResult r = run_cli("table stirling2 --n-max 4 --format json");
    CHECK(r.exit_code == 0);
    const auto j = parse_output(r);
    REQUIRE(j["entries"].size() == 15);  // rows 0..4 of the triangle
    // S2(4,2) = 7
    bool found = false;
    for (const auto& e : j["entries"]) {
        if (e["n"] == 4 && e["l"] == 2) {
            CHECK(e["value"] == "7");
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("table daehee2 json values") {
    const RunResult r = run_cli("table daehee2 --n-max 2 --k 1 --format json");
    CHECK(r.exit_code == 0);
    const auto j = parse_output(r);
    REQUIRE(j["entries"].size() == 3);
    CHECK(j["entries"][0]["value"] == "1");
    CHECK(j["entries"][1]["value"] == "-1/2");
    CHECK(j["entries"][2]["value"] == "-1/3");
    CHECK(j["params"]["sequence"] == "daehee2");
    CHECK(j["params"]["k"] == 1);
}

TEST_CASE("table input validation") {
    CHECK(run_cli("table bogus --n-max 3").exit_code == 2);
    CHECK(run_cli("table daehee1 --n-max 3").exit_code == 2);        // missing --k
    CHECK(run_cli("table stirling1 --n-max 3 --k 1").exit_code == 2);  // stray --k
    CHECK(run_cli("table daehee1 --n-max 3 --k 0").exit_code == 2);  // k < 1
    CHECK(run_cli("table daehee1 --k 1").exit_code == 2);            // missing --n-max
    CHECK(run_cli("table daehee1 --n-max 3 --k 1 --format xml").exit_code == 2);
}

TEST_CASE("poly payloads") {
    const RunResult r1 = run_cli("poly daehee1 --n 1 --k 1");
    CHECK(r1.exit_code == 0);
    const auto j1 = parse_output(r1);
    CHECK(j1["entries"][0]["degree"] == 1);
    CHECK(j1["entries"][0]["coefficients"][0] == "-1/2");
    CHECK(j1["entries"][0]["coefficients"][1] == "1");

    const RunResult r2 = run_cli("poly daehee1 --n 0 --k 5");
    const auto j2 = parse_output(r2);
    CHECK(j2["entries"][0]["coefficients"] == nlohmann::json::array({"1"}));

    const RunResult r3 = run_cli("poly daehee2 --n 1 --k 1 --format csv");
    CHECK(r3.output == "-1/2,-1\n");

    const RunResult r4 = run_cli("poly bernoulli --n 1 --k 3 --format csv");
    CHECK(r4.output == "-3/2,1\n");

    CHECK(run_cli("poly bogus --n 1 --k 1").exit_code == 2);
    CHECK(run_cli("poly daehee1 --n 1").exit_code == 2);
}

TEST_CASE("verify single identity on a tiny grid") {
    const RunResult r = run_cli("verify --ids T1 --n-max 0 --k-max 1");
    CHECK(r.exit_code == 0);
    const auto j = parse_output(r);
    REQUIRE(j["entries"].size() == 1);
    CHECK(j["entries"][0]["id"] == "T1");
    CHECK(j["entries"][0]["status"] == "pass");
    CHECK(j["entries"][0]["first_failure"].is_null());
}

TEST_CASE("verify subset preserves requested order") {
    const RunResult r = run_cli("verify --ids T8,T1,E4 --n-max 3 --k-max 1");
    CHECK(r.exit_code == 0);
    const auto j = parse_output(r);
    REQUIRE(j["entries"].size() == 3);
    CHECK(j["entries"][0]["id"] == "T8");
    CHECK(j["entries"][1]["id"] == "T1");
    CHECK(j["entries"][2]["id"] == "E4");
}

TEST_CASE("verify rejects bad input") {
    CHECK(run_cli("verify --ids BOGUS").exit_code == 2);
    CHECK(run_cli("verify --ids T1,NOPE --n-max 2 --k-max 1").exit_code == 2);
    CHECK(run_cli("verify --n-max -1").exit_code == 2);
    CHECK(run_cli("verify --k-max 0").exit_code == 2);
    CHECK(run_cli("verify --ids T1 --x-samples 1,oops").exit_code == 2);
}

TEST_CASE("verify full small run is deterministic") {
    const std::string cmd = "verify --ids all --n-max 4 --k-max 2";
    const RunResult a = run_cli(cmd);
    const RunResult b = run_cli(cmd);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    const auto j = parse_output(a);
    CHECK(j["entries"].size() == 18);
    CHECK(j["params"]["x_samples"].size() == 5);  // documented defaults
}

TEST_CASE("verify honours the jobs hint without changing output") {
    const RunResult serial = run_cli("verify --ids all --n-max 4 --k-max 2 --jobs 1");
    const RunResult parallel = run_cli("verify --ids all --n-max 4 --k-max 2 --jobs 4");
    CHECK(serial.exit_code == 0);
    CHECK(parallel.exit_code == 0);
    CHECK(serial.output == parallel.output);
}

TEST_CASE("volkenborn probes") {
    const RunResult r = run_cli("volkenborn --n 1 --k 1 --p 3 --depths 1..3");
    CHECK(r.exit_code == 0);
    const auto j = parse_output(r);
    REQUIRE(j["entries"].size() == 3);
    CHECK(j["params"]["depth_min"] == 1);
    CHECK(j["params"]["depth_max"] == 3);
    for (int i = 0; i < 3; ++i) {
        CHECK(j["entries"][i]["depth"] == i + 1);
        CHECK(j["entries"][i]["exact_value"] == "-1/2");
        CHECK(j["entries"][i]["valuation"] == std::to_string(i + 1));
    }
    CHECK(j["entries"][0]["partial_sum"] == "1");  // (0+1+2)/3
}

TEST_CASE("volkenborn constant integrand has zero error") {
    const RunResult r = run_cli("volkenborn --n 0 --k 1 --p 2 --depths 1..4 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "depth,partial_sum,exact_value,valuation\n"
          "1,1,1,inf\n2,1,1,inf\n3,1,1,inf\n4,1,1,inf\n");
}

TEST_CASE("volkenborn nondecreasing valuations at p=5") {
    const RunResult r = run_cli("volkenborn --n 2 --k 1 --p 5 --depths 1..4");
    CHECK(r.exit_code == 0);
    const auto j = parse_output(r);
    REQUIRE(j["entries"].size() == 4);
    for (int i = 0; i < 4; ++i) {
        CHECK(j["entries"][i]["exact_value"] == "2/3");
        CHECK(j["entries"][i]["valuation"] == std::to_string(i + 1));
    }
}

TEST_CASE("volkenborn input validation") {
    CHECK(run_cli("volkenborn --n 1 --k 1 --p 4 --depths 1..2").exit_code == 2);   // composite p
    CHECK(run_cli("volkenborn --n 1 --k 1 --p 3 --depths 3..1").exit_code == 2);   // inverted range
    CHECK(run_cli("volkenborn --n 1 --k 1 --p 3 --depths -1..2").exit_code == 2);  // negative depth
    CHECK(run_cli("volkenborn --n 1 --k 1 --p 3 --depths abc").exit_code == 2);
    CHECK(run_cli("volkenborn --n 1 --p 3").exit_code == 2);  // missing --depths
    // over budget with the closed form disabled: remediation hint, exit 2
    CHECK(run_cli("volkenborn --n 1 --k 1 --p 2 --depths 1..4 --budget 8 --literal-only").exit_code == 2);
    // same command without --literal-only succeeds via the closed form
    CHECK(run_cli("volkenborn --n 1 --k 1 --p 2 --depths 1..4 --budget 8").exit_code == 0);
}

TEST_CASE("environment variables fill in unset flags") {
    const RunResult r = run_cli("table daehee1 --n-max 1 --k 1", "DAEHEE_FORMAT=csv");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "n,value\n0,1\n1,-1/2\n");
    // explicit flag wins over the environment
    const RunResult r2 = run_cli("table daehee1 --n-max 1 --k 1 --format json", "DAEHEE_FORMAT=csv");
    CHECK(r2.exit_code == 0);
    CHECK(parse_output(r2)["entries"].size() == 2);
}

TEST_CASE("usage errors") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("table --help").exit_code == 0);
}

namespace {

// Writes a throwaway config file and returns its path.
std::string write_config(const std::string& name, const std::string& content) {
    const std::string path = std::string("/tmp/daehee_cli_test_") + name + ".ini";
    std::FILE* f = std::fopen(path.c_str(), "w");
    REQUIRE(f != nullptr);
    std::fwrite(content.data(), 1, content.size(), f);
    std::fclose(f);
    return path;
}

}  // namespace

TEST_CASE("config file fills unset options") {
    const std::string cfg = write_config("fill", "[table]\nformat=csv\n");
    const RunResult r = run_cli("--config " + cfg + " table daehee1 --n-max 1 --k 1");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "n,value\n0,1\n1,-1/2\n");
}

TEST_CASE("config file can supply every option of a subcommand") {
    const std::string cfg = write_config(
        "volk", "# probe defaults\n[volkenborn]\nn=1\nk=1\np=3\ndepths=1..2\nformat=csv\n");
    const RunResult r = run_cli("--config " + cfg + " volkenborn");
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "depth,partial_sum,exact_value,valuation\n1,1,-1/2,1\n2,4,-1/2,2\n");
}

TEST_CASE("flags beat the environment, which beats the config file") {
    const std::string cfg = write_config("prec", "[table]\nformat=csv\n");
    // flag wins over config
    const RunResult flag_wins = run_cli("--config " + cfg + " table daehee1 --n-max 1 --k 1 --format json");
    CHECK(flag_wins.exit_code == 0);
    CHECK(parse_output(flag_wins)["entries"].size() == 2);
    // environment wins over config
    const RunResult env_wins =
        run_cli("--config " + cfg + " table daehee1 --n-max 1 --k 1", "DAEHEE_FORMAT=json");
    CHECK(env_wins.exit_code == 0);
    CHECK(parse_output(env_wins)["entries"].size() == 2);
    // config still applies when neither is present
    const RunResult cfg_wins = run_cli("--config " + cfg + " table daehee1 --n-max 1 --k 1");
    CHECK(cfg_wins.output.substr(0, 8) == "n,value\n");
}

TEST_CASE("config file validation") {
    CHECK(run_cli("--config /nonexistent.ini table daehee1 --n-max 1 --k 1").exit_code == 2);
    const std::string broken = write_config("broken", "[table]\nthis line has no equals\n");
    CHECK(run_cli("--config " + broken + " table daehee1 --n-max 1 --k 1").exit_code == 2);
    const std::string bad_int = write_config("badint", "[table]\nn-max=abc\n");
    CHECK(run_cli("--config " + bad_int + " table daehee1 --k 1").exit_code == 2);
    const std::string bad_fmt = write_config("badfmt", "[table]\nformat=xml\n");
    CHECK(run_cli("--config " + bad_fmt + " table daehee1 --n-max 1 --k 1").exit_code == 2);
}
