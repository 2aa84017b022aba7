#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include "json.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

// Run the installed binary with the given arguments, capturing stdout,
// stderr and the exit code.
RunResult run(const std::string& args) {
    const std::string err_path =
        "/tmp/constellab_cli_stderr." + std::to_string(getpid()) + ".txt";
    const std::string command =
        std::string(CONSTELLAB_CLI_PATH) + " " + args + " 2>" + err_path;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buffer[4096];
    std::size_t n = 0;
    while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.out.append(buffer, n);
    const int status = pclose(pipe);
    if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
    std::ifstream err_stream(err_path);
    std::ostringstream err;
    err << err_stream.rdbuf();
    result.err = err.str();
    std::remove(err_path.c_str());
    return result;
}

std::string fixture(const std::string& name) {
    return std::string(CONSTELLAB_FIXTURE_DIR) + "/" + name;
}

std::string golden(const std::string& name) {
    std::ifstream stream(std::string(CONSTELLAB_GOLDEN_DIR) + "/" + name);
    REQUIRE(stream.good());
    std::ostringstream text;
    text << stream.rdbuf();
    return text.str();
}

void check_matches_golden(const std::string& args, const std::string& golden_name) {
    CAPTURE(args);
    const RunResult result = run(args);
    CHECK(result.exit_code == 0);
    CHECK(result.err.empty());
    CHECK(result.out == golden(golden_name));
}

}  // namespace

TEST_CASE("reports are byte-identical to the frozen goldens") {
    check_matches_golden("check --input " + fixture("z3_free_orbit.problem"),
                         "check_free_orbit.json");
    check_matches_golden("check --input " + fixture("z3_nilpotent.problem"),
                         "check_nilpotent.json");
    check_matches_golden("check --input " + fixture("subh_listed.problem"),
                         "check_listed.json");
    check_matches_golden("git-check --input " + fixture("z3_nilpotent.problem"),
                         "git_check_nilpotent.json");
    check_matches_golden("derive-params --input " + fixture("z3_free_orbit.problem"),
                         "derive_params_free_orbit.json");
    check_matches_golden("approx --input " + fixture("torus_asymmetric.problem") + " --window 2",
                         "approx_torus_w2.json");
    check_matches_golden("choose-window --input " + fixture("torus_asymmetric.problem"),
                         "choose_window_torus.json");
    check_matches_golden("enumerate --input " + fixture("z3_ghilb.problem"),
                         "enumerate_z3.json");
    check_matches_golden("hilbert-chow --input " + fixture("orbit_point.problem"),
                         "hilbert_chow_orbit_point.json");
}

TEST_CASE("repeated runs produce identical bytes") {
    const std::string args = "enumerate --input " + fixture("z3_ghilb.problem") + " --seed 41";
    const RunResult first = run(args);
    const RunResult second = run(args);
    CHECK(first.exit_code == 0);
    CHECK(first.out == second.out);
}

TEST_CASE("input problems exit with code 2 and a diagnostic") {
    const RunResult bad_pairing =
        run("derive-params --input " + fixture("bad_pairing.problem"));
    CHECK(bad_pairing.exit_code == 2);
    CHECK(bad_pairing.out.empty());  // never a partial report
    CHECK(bad_pairing.err.find("got 2") != std::string::npos);

    const RunResult missing_file = run("check --input /nonexistent.problem");
    CHECK(missing_file.exit_code == 2);
    CHECK(missing_file.err.find("cannot read") != std::string::npos);

    const RunResult missing_hprime =
        run("approx --input " + fixture("z3_free_orbit.problem"));
    CHECK(missing_hprime.exit_code == 2);
    CHECK(missing_hprime.err.find("hprime") != std::string::npos);

    const RunResult missing_input = run("check");
    CHECK(missing_input.exit_code == 2);

    const RunResult bad_flag =
        run("check --input " + fixture("z3_free_orbit.problem") + " --frobnicate");
    CHECK(bad_flag.exit_code == 2);
}

TEST_CASE("usage errors exit with code 2") {
    const RunResult no_args = run("");
    CHECK(no_args.exit_code == 2);
    CHECK(no_args.err.find("missing subcommand") != std::string::npos);

    const RunResult unknown = run("frobnicate --input x");
    CHECK(unknown.exit_code == 2);
    CHECK(unknown.err.find("unknown subcommand") != std::string::npos);
}

TEST_CASE("help prints the subcommand list and exits cleanly") {
    const RunResult help = run("--help");
    CHECK(help.exit_code == 0);
    CHECK(help.out.find("subcommands:") != std::string::npos);
    CHECK(help.out.find("constellation-lab") != std::string::npos);
}

TEST_CASE("the built-in selftest passes") {
    const RunResult selftest = run("selftest");
    CHECK(selftest.exit_code == 0);
    const auto report = nlohmann::json::parse(selftest.out);
    CHECK(report.at("schema") == "constellation-lab/1");
    CHECK(report.at("result").at("failed") == 0);
    CHECK(report.at("result").at("checks").get<long>() > 100);
}

TEST_CASE("timing can be opted into without breaking the schema") {
    const RunResult timed =
        run("check --input " + fixture("z3_free_orbit.problem") + " --timing");
    CHECK(timed.exit_code == 0);
    const auto report = nlohmann::json::parse(timed.out);
    CHECK(report.at("timing_ms").get<long>() >= 0);

    // Without the flag the field is pinned to zero so reports stay
    // byte-comparable.
    const RunResult untimed = run("check --input " + fixture("z3_free_orbit.problem"));
    const auto pinned = nlohmann::json::parse(untimed.out);
    CHECK(pinned.at("timing_ms") == 0);
}

TEST_CASE("enumerate classifies every staircase of the two-character fixture") {
    const RunResult z2 = run("enumerate --input " + fixture("z2_ghilb.problem"));
    CHECK(z2.exit_code == 0);
    const auto report = nlohmann::json::parse(z2.out);
    CHECK(report.at("result").at("count") == 2);
    CHECK(report.at("result").at("status_counts").at("STABLE") == 2);
    for (const auto& entry : report.at("result").at("entries")) {
        CHECK(entry.at("theta").at("status") == "STABLE");
        CHECK(entry.at("git").at("status") == "STABLE");
    }
}

TEST_CASE("flag overrides are reflected in the task echo") {
    const RunResult seeded =
        run("check --input " + fixture("z3_free_orbit.problem") + " --seed 9 --samples 8 --cap 500");
    CHECK(seeded.exit_code == 0);
    const auto report = nlohmann::json::parse(seeded.out);
    CHECK(report.at("task").at("seed") == 9);
    CHECK(report.at("task").at("samples") == 8);
    CHECK(report.at("task").at("cap") == 500);

    const RunResult bounded = run(
        "approx --input " + fixture("torus_asymmetric.problem") + " --bound 1/500 --window 3");
    CHECK(bounded.exit_code == 0);
    const auto approx = nlohmann::json::parse(bounded.out);
    CHECK(approx.at("task").at("bound") == "1/500");
}
