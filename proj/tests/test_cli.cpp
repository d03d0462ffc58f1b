// Exercises the installed command-line surface end to end: exit codes,
// deterministic reports, CSV output.
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef ANTIDIST_CLI_PATH
#error "ANTIDIST_CLI_PATH must be defined"
#endif
#ifndef ANTIDIST_DATA_DIR
#error "ANTIDIST_DATA_DIR must be defined"
#endif

namespace {

int run(const std::string& args) {
    const std::string cmd = std::string(ANTIDIST_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string data(const std::string& name) {
    return std::string(ANTIDIST_DATA_DIR) + "/" + name;
}

std::string tmp(const std::string& name) {
    return std::string("cli_test_") + name;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("check-states: antidistinguishable file exits 0") {
    CHECK(run("check-states " + data("pbr.json")) == 0);
}

TEST_CASE("check-states: single-state file exits 1") {
    CHECK(run("check-states " + data("single_state.json")) == 1);
}

TEST_CASE("check-states: malformed file exits 2") {
    CHECK(run("check-states " + data("malformed.json")) == 2);
}

TEST_CASE("check-states: missing file exits 2") {
    CHECK(run("check-states /does/not/exist.json") == 2);
}

TEST_CASE("repro requires a seed for stochastic checks") {
    CHECK(run("repro thm6") == 2);
    CHECK(run("repro thm8") == 0);  // deterministic, no seed needed
}

TEST_CASE("repro reports are byte-identical under --no-timestamp") {
    const std::string a = tmp("repro_a.json"), b = tmp("repro_b.json");
    REQUIRE(run("repro thm1 --seed 12 --trials 20 --no-timestamp --json-out " + a) == 0);
    REQUIRE(run("repro thm1 --seed 12 --trials 20 --no-timestamp --json-out " + b) == 0);
    const std::string ja = slurp(a), jb = slurp(b);
    CHECK(ja == jb);
    CHECK(ja.find("wall_time") == std::string::npos);
    std::remove(a.c_str());
    std::remove(b.c_str());
}

TEST_CASE("repro all runs every check and keeps discrepancies non-fatal") {
    const std::string out = tmp("repro_all.json");
    REQUIRE(run("repro all --seed 7 --trials 5 --no-timestamp --json-out " + out) == 0);
    const std::string body = slurp(out);
    for (const char* id : {"thm1", "thm2", "thm3", "thm4", "thm5", "thm6", "thm7",
                           "thm8", "thm9"})
        CHECK(body.find(id) != std::string::npos);
    CHECK(body.find("discrepancy") != std::string::npos);  // thm3 interval, thm9 triple
    std::remove(out.c_str());
}

TEST_CASE("sweep-p writes the CSV contract") {
    const std::string csv = tmp("sweep.csv");
    REQUIRE(run("sweep-p --d 3 --p-min 0.5 --p-max 1.0 --steps 11 --csv-out " + csv) == 0);
    const std::string body = slurp(csv);
    CHECK(body.rfind("p,x1,x2,x3,margin_4a,margin_4b,verdict\n", 0) == 0);
    CHECK(body.find("transition") != std::string::npos);
    std::remove(csv.c_str());
}

TEST_CASE("sweep-p rejects a bad range") {
    CHECK(run("sweep-p --d 3 --p-min 0.9 --p-max 0.5") == 2);
}

TEST_CASE("random-hierarchy runs and respects --seed requirement") {
    CHECK(run("random-hierarchy --trials 20 --seed 4") == 0);
    CHECK(run("random-hierarchy --trials 20") != 0);  // missing required option
}

TEST_CASE("family command decides and exits accordingly") {
    CHECK(run("family --family wxw --probe single:0") == 0);   // value 1
    CHECK(run("family --family v3 --probe maxent") == 1);      // not antidistinguishable
    CHECK(run("family --family v3 --probe single:0") == 0);    // basis probe certifies
    CHECK(run("family --family nope") == 2);
}

TEST_SUITE_END();
