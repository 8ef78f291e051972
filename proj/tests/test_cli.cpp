// Drives the installed binary through a shell, checking output bytes and
// exit codes.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "support.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string shell_quote(const std::string& arg) {
    std::string quoted = "'";
    for (char c : arg) {
        if (c == '\'')
            quoted += "'\\''";
        else
            quoted += c;
    }
    quoted += "'";
    return quoted;
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

RunResult run_cli(const std::vector<std::string>& args) {
    static int counter = 0;
    auto dir = std::filesystem::temp_directory_path();
    auto out_path = dir / ("fcax_cli_out_" + std::to_string(++counter));
    auto err_path = dir / ("fcax_cli_err_" + std::to_string(counter));

    std::string command = shell_quote(FCAX_CLI_PATH);
    for (auto& a : args) command += " " + shell_quote(a);
    command += " >" + shell_quote(out_path.string()) + " 2>" + shell_quote(err_path.string());

    int raw = std::system(command.c_str());
    RunResult result;
    result.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    result.out = slurp(out_path);
    result.err = slurp(err_path);
    std::filesystem::remove(out_path);
    std::filesystem::remove(err_path);
    return result;
}

std::string fixture(const std::string& name) { return testsupport::fixture_path(name); }

}  // namespace

TEST_CASE("implication and conditional queries") {
    auto r = run_cli({"implication", fixture("animals.cxt"), "bird -> flies"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "holds: false\n");

    r = run_cli({"conditional", fixture("animals.cxt"), "--prefs", fixture("animals.ord"),
                 "bird ~> flies"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "holds: true\n");

    r = run_cli({"implication", fixture("animals.cxt"), "flies -> !antarctic"});
    CHECK(r.out == "holds: true\n");

    // --assert turns a non-holding query into exit 1.
    r = run_cli({"implication", fixture("animals.cxt"), "bird -> flies", "--assert"});
    CHECK(r.exit_code == 1);
    r = run_cli({"conditional", fixture("animals.cxt"), "--prefs", fixture("animals.ord"),
                 "bird ~> flies", "--assert"});
    CHECK(r.exit_code == 0);
}

TEST_CASE("usage and input errors exit 2 with a message on stderr") {
    auto r = run_cli({"conditional", fixture("animals.cxt"), "bird ~> flies"});
    CHECK(r.exit_code == 2);  // missing --prefs

    r = run_cli({"implication", fixture("animals.cxt"), "bird -> wings"});
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("wings") != std::string::npos);

    r = run_cli({"implication", "no_such_file.cxt", "bird -> flies"});
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("no_such_file.cxt") != std::string::npos);

    r = run_cli({"frobnicate", fixture("animals.cxt")});
    CHECK(r.exit_code == 2);

    r = run_cli({"lattice", fixture("animals.cxt"), "--format", "yaml"});
    CHECK(r.exit_code == 2);

    // Forcing the wrong context format is a parse error.
    r = run_cli({"lattice", fixture("mythology.csv"), "--context-format", "cxt"});
    CHECK(r.exit_code == 2);
    r = run_cli({"lattice", fixture("mythology.csv"), "--context-format", "csv"});
    CHECK(r.exit_code == 0);

    // Parse errors point at the offending line.
    auto bad = std::filesystem::temp_directory_path() / "fcax_bad.cxt";
    std::ofstream(bad) << "B\n2\n1\ng1\ng2\nm\nX\n?\n";
    r = run_cli({"lattice", bad.string()});
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("line 8") != std::string::npos);
    std::filesystem::remove(bad);
}

TEST_CASE("lattice reports") {
    auto r = run_cli({"lattice", fixture("animals.cxt"), "--format", "json"});
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["concepts"].size() == 8);

    // Byte-determinism across runs.
    auto again = run_cli({"lattice", fixture("animals.cxt"), "--format", "json"});
    CHECK(again.out == r.out);

    // Round-trip: re-serializing the context changes nothing downstream.
    auto serialized = std::filesystem::temp_directory_path() / "fcax_roundtrip.cxt";
    std::ofstream(serialized, std::ios::binary)
        << testsupport::load_context("animals.cxt").to_cxt();
    auto reparsed = run_cli({"lattice", serialized.string(), "--format", "json"});
    CHECK(reparsed.out == r.out);
    std::filesystem::remove(serialized);

    auto dot = run_cli({"lattice", fixture("animals.cxt"), "--prefs", fixture("animals.ord"),
                        "--format", "dot"});
    REQUIRE(dot.exit_code == 0);
    CHECK(dot.out.find("digraph lattice {") == 0);
    CHECK(dot.out.find("fillcolor=gray") != std::string::npos);
    auto dot_again = run_cli({"lattice", fixture("animals.cxt"), "--prefs",
                              fixture("animals.ord"), "--format", "dot"});
    CHECK(dot_again.out == dot.out);
}

TEST_CASE("derive command") {
    auto r = run_cli({"derive", fixture("animals.cxt"), "bird", "--prefs",
                      fixture("animals.ord"), "--oracle"});
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("extent (B'): {duck, robin, penguin}") != std::string::npos);
    CHECK(r.out.find("closure (B''): {southern, bird}") != std::string::npos);
    CHECK(r.out.find("min: {duck, robin}") != std::string::npos);

    r = run_cli({"derive", fixture("animals.cxt"), "duck,penguin", "--objects"});
    CHECK(r.out.find("intent (A'): {southern, bird}") != std::string::npos);
}

TEST_CASE("semilattice json matches the documented schema") {
    auto r = run_cli({"semilattice", fixture("meetgap.cxt"), "--prefs", fixture("meetgap.ord"),
                      "--format", "json"});
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["meet_closed"] == false);
    CHECK(j["valid_order"] == false);
    CHECK(j.contains("typical"));
    CHECK(j.contains("has_top"));
    CHECK(j.contains("join_counterexample"));
    CHECK(j.contains("validity_witness"));
}

TEST_CASE("validate-order and klm-check") {
    auto r = run_cli({"validate-order", fixture("animals.cxt"), "--prefs",
                      fixture("animals.ord"), "--oracle"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "valid_order: true\n");

    r = run_cli({"validate-order", fixture("meetgap.cxt"), "--prefs", fixture("meetgap.ord"),
                 "--assert"});
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("valid_order: false") != std::string::npos);
    CHECK(r.out.find("validity_witness") != std::string::npos);

    r = run_cli({"klm-check", fixture("mythology.csv"), "--prefs", fixture("mythology.ord"),
                 "--mode", "exhaustive"});
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("result: ok") != std::string::npos);

    // Non-ranked order: RM violations are reported, --assert exits 1.
    r = run_cli({"klm-check", fixture("animals.cxt"), "--prefs", fixture("animals.ord"),
                 "--mode", "exhaustive", "--assert"});
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("RM") != std::string::npos);
    CHECK(r.out.find("result: violations found") != std::string::npos);

    r = run_cli({"klm-check", fixture("mythology.csv"), "--prefs", fixture("mythology.ord"),
                 "--mode", "sampled", "--samples", "25", "--seed", "9", "--format", "json"});
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["ok"] == true);
    CHECK(j["samples"] == 25);
    CHECK(j["seed"] == 9);
    auto again = run_cli({"klm-check", fixture("mythology.csv"), "--prefs",
                          fixture("mythology.ord"), "--mode", "sampled", "--samples", "25",
                          "--seed", "9", "--format", "json"});
    CHECK(again.out == r.out);
}

TEST_CASE("typical command") {
    auto r = run_cli({"typical", fixture("animals.cxt"), "--prefs", fixture("animals.ord"),
                      "bird"});
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("extent={duck, robin}") != std::string::npos);
    CHECK(r.out.find("intent={northern, southern, flies, bird}") != std::string::npos);

    r = run_cli({"typical", fixture("animals.cxt"), "--prefs", fixture("animals.ord"),
                 "--format", "json"});
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["typical"].size() == 6);
    CHECK(j["meet_closed"] == true);
    CHECK(j["valid_order"] == true);
}

TEST_CASE("oracle flag is accepted everywhere it applies") {
    auto r = run_cli({"lattice", fixture("animals.cxt"), "--oracle", "--format", "json"});
    CHECK(r.exit_code == 0);
    r = run_cli({"conditional", fixture("mythology.csv"), "--prefs", fixture("mythology.ord"),
                 "hero ~> demigod", "--oracle"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "holds: true\n");
    r = run_cli({"klm-check", fixture("meetgap.cxt"), "--prefs", fixture("meetgap.ord"),
                 "--mode", "exhaustive", "--oracle"});
    CHECK(r.exit_code == 0);
}
