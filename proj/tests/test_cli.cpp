#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct CmdResult {
  int exit_code = -1;
  std::string out;
};

// Runs the built CLI with the given arguments, captures stdout and the exit
// code. stderr is dropped; the tests only assert on contract-level output.
CmdResult run_cli(const std::string& args) {
  const std::string cmd = std::string(BCH_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
  const int status = pclose(pipe);
  CmdResult result;
  result.out = std::move(out);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

using nlohmann::json;

}  // namespace

TEST_CASE("term output") {
  auto r = run_cli("term --preset fibonacci -n 10 --format json");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "{\"n\":10,\"coeffs\":{\"1\":\"55\",\"i\":\"89\",\"j\":\"144\",\"k\":\"233\"}}\n");

  r = run_cli("term --preset lucas -n 0");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "2 + 1*i + 3*j + 4*k\n");

  r = run_cli("term --a 1 --b 1 --p 2 --q 3 -n 0");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1 + 1*i + 5*j + 13*k\n");

  r = run_cli("term --preset fibonacci -n -1");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1 + 0*i + 1*j + 1*k\n");

  r = run_cli("term --preset lucas -n 6 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "n,1,i,j,k\n6,18,29,47,76\n");

  r = run_cli("term --preset fibonacci -n 12 --strategy binet");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "144 + 233*i + 377*j + 610*k\n");
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli("term --preset nope -n 0").exit_code == 2);
  CHECK(run_cli("term -n 0 --strategy quantum").exit_code == 2);
  CHECK(run_cli("term --a 1 --b 1 --p 2 --q 0 -n -1").exit_code == 2);   // q = 0
  CHECK(run_cli("term --a 1 --b 3 --p 2 --q -1 --strategy binet -n 5").exit_code ==
        2);  // repeated root
  CHECK(run_cli("term --a 1.5 --b 1 --p 1 --q 1 -n 1").exit_code == 2);
  CHECK(run_cli("term --a 1 -n 1").exit_code == 2);  // partial params
  CHECK(run_cli("term --preset lucas --a 2 -n 1").exit_code == 2);
  CHECK(run_cli("gf --preset lucas").exit_code == 2);  // missing --order
  CHECK(run_cli("gf --preset lucas --order -3").exit_code == 2);
  CHECK(run_cli("verify --identity no_such_identity").exit_code == 2);
  CHECK(run_cli("bench -n 10 --strategies matrix,turbo").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);  // subcommand required
}

TEST_CASE("gf output") {
  auto r = run_cli("gf --preset lucas --order 3 --format json");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("numerator").at(0) ==
        json({{"1", "2"}, {"i", "1"}, {"j", "3"}, {"k", "4"}}));
  CHECK(j.at("numerator").at(1) ==
        json({{"1", "-1"}, {"i", "2"}, {"j", "1"}, {"k", "3"}}));
  CHECK(j.at("denominator") == json::array({"1", "-1", "-1"}));
  REQUIRE(j.at("coefficients").size() == 4);
  CHECK(j.at("coefficients").at(0).at("1") == "2");
  CHECK(j.at("coefficients").at(3).at("1") == "4");  // BL_3 = 4 + 7i + 11j + 18k

  r = run_cli("gf --preset fibonacci --order 0 --format json");
  REQUIRE(r.exit_code == 0);
  const json j0 = json::parse(r.out);
  REQUIRE(j0.at("coefficients").size() == 1);
  CHECK(j0.at("coefficients").at(0) ==
        json({{"1", "0"}, {"i", "1"}, {"j", "1"}, {"k", "2"}}));
}

TEST_CASE("verify exit codes follow the verdicts") {
  auto r = run_cli("verify --identity bf_plus_bl --n-max 100 --format json");
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.out).at("verdict") == "HOLDS");

  r = run_cli("verify --identity horadam_catalan --preset pell --n-max 60 --r-max 5 "
              "--format json");
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.out).at("verdict") == "HOLDS");

  // verdicts for the literature forms are whatever evaluation says; exit code
  // and report must agree with each other either way
  for (const std::string identity : {"lucas_catalan_paper", "sum_sq"}) {
    r = run_cli("verify --identity " + identity + " --n-max 30 --r-max 3 --format json");
    REQUIRE((r.exit_code == 0 || r.exit_code == 1));
    const json report = json::parse(r.out);
    if (r.exit_code == 0) {
      CHECK(report.at("verdict") == "HOLDS");
      CHECK(report.at("counterexamples").empty());
    } else {
      CHECK(report.at("verdict") == "FAILS");
      REQUIRE_FALSE(report.at("counterexamples").empty());
      // minimal witness first
      const auto& first = report.at("counterexamples").at(0).at("indices");
      for (const auto& c : report.at("counterexamples"))
        CHECK(first.at("n").get<long>() <= c.at("indices").at("n").get<long>());
    }
  }
}

TEST_CASE("verify refuses non-preset params for pinned identities") {
  CHECK(run_cli("verify --identity five_bf_sq --preset pell").exit_code == 2);
  CHECK(run_cli("verify --identity five_bf_sq --preset lucas --n-max 20").exit_code == 0);
}

TEST_CASE("verify all emits one report per catalog entry") {
  const auto r = run_cli(
      "verify --identity all --n-max 25 --r-max 3 --m-max 8 --format json");
  REQUIRE((r.exit_code == 0 || r.exit_code == 1));
  const json reports = json::parse(r.out);
  REQUIRE(reports.is_array());
  CHECK(reports.size() == 15);
  bool any_fails = false;
  for (const auto& report : reports)
    any_fails = any_fails || report.at("verdict") == "FAILS";
  CHECK(any_fails == (r.exit_code == 1));
}

TEST_CASE("verify json output is byte-stable across runs") {
  const std::string cmd =
      "verify --identity lucas_cassini_paper --n-max 12 --format json";
  const auto first = run_cli(cmd);
  const auto second = run_cli(cmd);
  CHECK(first.exit_code == second.exit_code);
  CHECK(first.out == second.out);
}

TEST_CASE("bench") {
  auto r = run_cli("bench --preset fibonacci -n 0 --format json");
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.out).at("agree") == true);

  r = run_cli("bench --preset lucas -n 1000 --strategies matrix,binet --format json");
  CHECK(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("agree") == true);
  REQUIRE(j.at("results").size() == 2);
  CHECK(j.at("results").at(0).at("strategy") == "matrix");
  CHECK(j.at("results").at(0).at("matrix_mults").get<long>() <= 2 * 10 + 1);

  r = run_cli("bench -n -4");
  CHECK(r.exit_code == 2);
}

TEST_CASE("--out mirrors stdout bytes") {
  namespace fs = std::filesystem;
  const fs::path path = fs::temp_directory_path() / "bch_cli_out_test.json";
  const auto r =
      run_cli("term --preset lucas -n 3 --format json --out " + path.string());
  REQUIRE(r.exit_code == 0);
  std::ifstream file(path, std::ios::binary);
  REQUIRE(file.good());
  std::stringstream contents;
  contents << file.rdbuf();
  CHECK(contents.str() == r.out);
  fs::remove(path);
}
