// End-to-end checks of the installed command-line tool, driven through the
// shell. BESTOFN_CLI_PATH is injected by the build.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

using nlohmann::json;

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(BESTOFN_CLI_PATH) + " " + args + " 2>/dev/null";
  std::FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult r;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0)
    r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("exact command: rational output and envelope shape") {
  const auto r = run_cli("exact --regime constant --n 2 --p 3/5");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j["command"] == "exact");
  CHECK(j["parameters"]["mode"] == "exact");
  CHECK(j["results"]["E_Z"] == "62/125");
  CHECK(j["results"]["total_probability"] == "1/1");
  CHECK(j["provenance"].contains("version"));
  CHECK(j["provenance"]["rng_algorithm"] == "xoshiro256++");
  CHECK(j["provenance"].contains("timestamp"));
}

TEST_CASE("exact command: anti-ok single round") {
  const auto r = run_cli("exact --regime antiok --n 1");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j["results"]["p1_margin"][0] == "1/2");
  CHECK(j["results"]["p2_margin"][0] == "1/2");
}

TEST_CASE("decimal p switches to float mode") {
  const auto r = run_cli("exact --regime constant --n 2 --p 0.6");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j["parameters"]["mode"] == "float");
  CHECK(j["results"]["E_Z"].is_number());
  CHECK(j["results"]["E_Z"].get<double>() == doctest::Approx(0.496));
}

TEST_CASE("csv format emits a table") {
  const auto r = run_cli("exact --regime constant --n 2 --p 1/2 --format csv");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.rfind("k,p1_margin,p2_margin\n", 0) == 0);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli("exact").exit_code == 2);                       // missing --n
  CHECK(run_cli("exact --n 2 --regime bogus").exit_code == 2);  // bad choice
  CHECK(run_cli("nonsense").exit_code == 2);
  CHECK(run_cli("exact --regime constant --n 2 --p 7/5").exit_code == 2);
}

TEST_CASE("exact capacity cap exits with 3") {
  CHECK(run_cli("exact --regime constant --n 600 --p 1/2 --mode exact")
            .exit_code == 3);
  CHECK(run_cli("exact --regime constant --n 600 --p 1/2 --mode exact "
                "--exact-cap 1024")
            .exit_code == 0);
}

TEST_CASE("simulation results are reproducible byte for byte") {
  const std::string args =
      "simulate --regime polya --n 4 --n1 2 --n2 1 --samples 20000 --seed 11 "
      "--partitions 4";
  const auto a = run_cli(args);
  const auto b = run_cli(args);
  REQUIRE(a.exit_code == 0);
  REQUIRE(b.exit_code == 0);
  CHECK(json::parse(a.out)["results"].dump() ==
        json::parse(b.out)["results"].dump());
}

TEST_CASE("simulate --compare-exact reports a small TV distance") {
  const auto r = run_cli(
      "simulate --regime constant --n 3 --p 3/5 --samples 200000 --seed 7 "
      "--compare-exact");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j["results"]["tv_distance_to_exact"].get<double>() < 0.01);
  CHECK(j["provenance"]["seed"] == 7);
}

TEST_CASE("formula subcommands") {
  const auto mean =
      run_cli("formula catalan-mean --n 5 --p 3/5 --check");
  REQUIRE(mean.exit_code == 0);
  CHECK(json::parse(mean.out)["results"]["check_pass"] == true);

  const auto antiok = run_cli("formula antiok-exact --n 3 --k 1");
  REQUIRE(antiok.exit_code == 0);
  CHECK(json::parse(antiok.out)["results"]["probability"] == "3/10");

  const auto profit = run_cli("formula polya-profit --n 5");
  REQUIRE(profit.exit_code == 0);
  CHECK(json::parse(profit.out)["results"]["closed_form_exact"] == "935/512");

  const auto ids = run_cli("formula identities --max 12");
  REQUIRE(ids.exit_code == 0);
  CHECK(json::parse(ids.out)["results"]["all_pass"] == true);
}

TEST_CASE("verify identities suite passes") {
  const auto r = run_cli("verify --suite identities");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j["results"]["all_pass"] == true);
  CHECK(j["results"]["checks"].is_array());
  CHECK(!j["results"]["checks"].empty());
}

TEST_CASE("plotdata outputs") {
  const auto path = run_cli("plotdata path --regime antiok --n 5 --seed 3");
  REQUIRE(path.exit_code == 0);
  CHECK(path.out.rfind("k,X_k,line\n", 0) == 0);

  const auto zeta = run_cli("plotdata zeta-density --n1 1 --n2 1 --points 11");
  REQUIRE(zeta.exit_code == 0);
  CHECK(zeta.out.rfind("x,f_zeta\n", 0) == 0);
  // 11 grid rows plus the header
  int lines = 0;
  for (char c : zeta.out)
    if (c == '\n') ++lines;
  CHECK(lines == 12);

  const auto pmf = run_cli("plotdata margin-pmf --regime constant --n 3 --p 1/2");
  REQUIRE(pmf.exit_code == 0);
  CHECK(pmf.out.rfind("k,p1_margin,p2_margin\n", 0) == 0);
}
