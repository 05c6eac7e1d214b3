#ifdef WAPPELL_CLI_BINARY

#include "doctest.h"

#include <array>
#include <cstdio>
#include <string>

#include "json.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string output;  // stdout only
};

// Runs the CLI with the given arguments, capturing stdout; stderr is dropped
// so warnings cannot perturb the byte-determinism checks.
RunResult run_cli(const std::string& args) {
  const std::string cmd =
      std::string(WAPPELL_CLI_BINARY) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  std::array<char, 4096> buffer;
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    output.append(buffer.data(), got);
  }
  const int status = pclose(pipe);
  const int exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {exit_code, output};
}

}  // namespace

TEST_CASE("compute prints the polynomial in plain text") {
  const RunResult r = run_cli("compute --seq hermite --partition 2,1");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "x^3\n");
  const RunResult m = run_cli("compute --seq monomial --partition 3,3,1");
  CHECK(m.exit_code == 0);
  CHECK(m.output == "x^7\n");
  const RunResult l = run_cli("compute --seq laguerre:2 --partition 1");
  CHECK(l.exit_code == 0);
  CHECK(l.output == "x + 2\n");
}

TEST_CASE("compute honors the route flag") {
  for (const char* route : {"direct", "phi", "recurrence", "cross"}) {
    const RunResult r = run_cli(
        std::string("compute --seq hermite --partition 2,2 --route ") + route);
    CHECK(r.exit_code == 0);
    CHECK(r.output == "x^4 + 3\n");
  }
}

TEST_CASE("table lists every partition up to the bound") {
  const RunResult r = run_cli("table --seq hermite --max-size 2");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "0: 1\n1: x\n2: x^2 - 1\n1,1: x^2 + 1\n");
  const RunResult zero = run_cli("table --seq laguerre:5 --max-size 0");
  CHECK(zero.exit_code == 0);
  CHECK(zero.output == "0: 1\n");
}

TEST_CASE("json output carries exact coefficient strings") {
  const RunResult r =
      run_cli("compute --seq hermite --partition 2,1 --format json");
  CHECK(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.output);
  CHECK(doc["command"] == "compute");
  CHECK(doc["partition"] == nlohmann::json::array({2, 1}));
  CHECK(doc["poly"] == nlohmann::json::array({"0", "0", "0", "1"}));
  CHECK(doc["rendered"] == "x^3");

  const RunResult v =
      run_cli("verify appell --seq hermite --max-size 4 --format json");
  CHECK(v.exit_code == 0);
  const auto vdoc = nlohmann::json::parse(v.output);
  CHECK(vdoc["status"] == "pass");
  CHECK(vdoc["results"][0]["identity"] == "appell");
  CHECK(vdoc["results"][0]["failures"].empty());
}

TEST_CASE("latex output uses fraction and exponent markup") {
  const RunResult r =
      run_cli("compute --seq cumulants:1/2 --partition 2 --format latex");
  CHECK(r.exit_code == 0);
  // A_2 for c_1 = 1/2: (x + 1/2)^2 = x^2 + x + 1/4.
  CHECK(r.output == "x^{2} + x + \\frac{1}{4}\n");
}

TEST_CASE("explain dumps the integer expansion table") {
  const RunResult r =
      run_cli("compute --seq hermite --partition 2,1 --explain");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("x^3") != std::string::npos);
  CHECK(r.output.find("[3]: -1") != std::string::npos);
  CHECK(r.output.find("[1,1,1]: 1") != std::string::npos);
}

TEST_CASE("stats reports the three summary polynomials") {
  const RunResult r = run_cli("stats --seq hermite --max-size 2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("mean: x^2") != std::string::npos);
  CHECK(r.output.find("second moment: x^4 + 1") != std::string::npos);
  CHECK(r.output.find("variance: 1") != std::string::npos);
  CHECK(r.output.find("VIOLATED") == std::string::npos);
}

TEST_CASE("verify exits zero on honest specs and is byte-deterministic") {
  const RunResult first = run_cli("verify all --seq hermite --max-size 4");
  CHECK(first.exit_code == 0);
  CHECK(first.output.find("overall: PASS") != std::string::npos);
  const RunResult second = run_cli("verify all --seq hermite --max-size 4");
  CHECK(second.output == first.output);
  const RunResult table1 = run_cli("table --seq jacobi:1/3,1/5 --max-size 4");
  const RunResult table2 = run_cli("table --seq jacobi:1/3,1/5 --max-size 4");
  CHECK(table1.exit_code == 0);
  CHECK(table1.output == table2.output);
}

TEST_CASE("verify exits one when a cumulant is corrupted") {
  const RunResult r =
      run_cli("verify all --seq hermite --max-size 4 --corrupt-cumulant 2");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("overall: FAIL") != std::string::npos);
  CHECK(r.output.find("witness") != std::string::npos);
}

TEST_CASE("usage errors exit with code two") {
  CHECK(run_cli("compute --seq nosuch --partition 1").exit_code == 2);
  CHECK(run_cli("compute --seq hermite --partition 3,5").exit_code == 2);
  CHECK(run_cli("compute --seq hermite").exit_code == 2);  // missing partition
  CHECK(run_cli("compute --seq hermite --partition 1 --format yaml").exit_code ==
        2);
  CHECK(run_cli("verify nosuch --seq hermite").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("environment variable sets the default format") {
  const std::string cmd = std::string("WAPPELL_FORMAT=json ") +
                          WAPPELL_CLI_BINARY +
                          " compute --seq hermite --partition 1 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  std::array<char, 4096> buffer;
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    output.append(buffer.data(), got);
  }
  pclose(pipe);
  const auto doc = nlohmann::json::parse(output);
  CHECK(doc["rendered"] == "x");
}

#endif  // WAPPELL_CLI_BINARY
