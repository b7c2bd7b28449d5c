#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "run_cli.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("dispersion prints the exact and limiting energies") {
  const CliResult r = run_cli("dispersion 3 4");
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["mass"] == 3.0);
  CHECK(j["momentum"] == 4.0);
  CHECK(j["exact"].get<double>() == doctest::Approx(5.0));
  CHECK(j["ultrarelativistic"] == 4.0);
}

TEST_CASE("dispersion reports the massless divergence as null") {
  const CliResult r = run_cli("dispersion 0 5");
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["nonrelativistic"].is_null());
  CHECK(j["exact"] == 5.0);
}

TEST_CASE("dispersion rejects negative mass with the domain exit code") {
  CHECK(run_cli("dispersion -1 2").code == 3);
}

TEST_CASE("dispersion needs both positionals") {
  CHECK(run_cli("dispersion 1").code == 2);
}

TEST_CASE("parton from beam parameters") {
  const CliResult r = run_cli("parton --mass 0.938 --energy 900");
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["eta"].get<double>() == doctest::Approx(7.559547002303268));
  CHECK(j["time_ratio"].get<double>() ==
        doctest::Approx(2.7155693760973723e-07).epsilon(1e-9));
  CHECK(j.contains("var_z"));
  CHECK(j.contains("var_qz"));
}

TEST_CASE("parton from rapidity directly") {
  const CliResult r = run_cli("parton --eta 1");
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["eta"] == 1.0);
  CHECK(j["time_ratio"].get<double>() == doctest::Approx(std::exp(-2.0)));
}

TEST_CASE("parton below threshold is a domain error") {
  CHECK(run_cli("parton --mass 1 --energy 0.5").code == 3);
}

TEST_CASE("parton input modes are exclusive") {
  CHECK(run_cli("parton --eta 1 --mass 1 --energy 2").code == 2);
  CHECK(run_cli("parton").code == 2);
  CHECK(run_cli("parton --mass 1").code == 2);
}

TEST_CASE("moments emits one JSON line per rapidity") {
  const CliResult r = run_cli("moments --eta 0,1");
  REQUIRE(r.code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 2);
  const json first = json::parse(lines[0]);
  CHECK(first["analytic"]["var_z"] == 0.5);
  CHECK(first["analytic"]["eta"] == 0.0);
  CHECK(first["quadrature"]["var_z"].get<double>() == doctest::Approx(0.5));
  const json second = json::parse(lines[1]);
  CHECK(second["analytic"]["product_z_qz"].get<double>() ==
        doctest::Approx(3.538529104502061));
}

TEST_CASE("moments rejects malformed lists and out-of-envelope rapidity") {
  CHECK(run_cli("moments --eta bogus").code == 2);
  CHECK(run_cli("moments --eta 1,,2").code == 2);
  CHECK(run_cli("moments").code == 2);
  CHECK(run_cli("moments --eta 5").code == 3);
}

TEST_CASE("verify algebra passes and prints one report per check") {
  const CliResult r = run_cli("verify algebra");
  REQUIRE(r.code == 0);
  const auto lines = lines_of(r.out);
  CHECK(lines.size() == 14);
  for (const auto& line : lines) {
    const json j = json::parse(line);
    CHECK(j["passed"] == true);
    CHECK(j.contains("check_name"));
    CHECK(j.contains("measured_error"));
    CHECK(j.contains("tolerance"));
  }
}

TEST_CASE("verify accepts the suite as an option too") {
  const CliResult r = run_cli("verify --suite contraction");
  REQUIRE(r.code == 0);
  CHECK(lines_of(r.out).size() == 6);
}

TEST_CASE("verify rejects unknown and doubled suites") {
  CHECK(run_cli("verify nosuch").code == 2);
  CHECK(run_cli("verify algebra --suite moments").code == 2);
}

TEST_CASE("verify output is stable across runs") {
  const CliResult a = run_cli("verify contraction");
  const CliResult b = run_cli("verify contraction");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("tolerance env var is validated") {
  CHECK(run_cli("verify algebra", "WIGNERLAB_TOL=abc ").code == 2);
  CHECK(run_cli("verify algebra", "WIGNERLAB_TOL=-1 ").code == 2);
  CHECK(run_cli("verify algebra", "WIGNERLAB_TOL=1e-6 ").code == 0);
}

TEST_CASE("wavefunction samples a position grid as CSV") {
  const CliResult r = run_cli("wavefunction --n 0 --eta 0 --grid 5x5");
  REQUIRE(r.code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 26);
  CHECK(lines[0] == "z,t,psi");
  // center cell (z = 0, t = 0) carries the peak value
  const std::string& center = lines[13];
  const std::size_t last_comma = center.rfind(',');
  REQUIRE(last_comma != std::string::npos);
  CHECK(std::stod(center.substr(last_comma + 1)) ==
        doctest::Approx(0.5641895835477563).epsilon(1e-15));
}

TEST_CASE("wavefunction momentum grid uses the momentum header") {
  const CliResult r = run_cli("wavefunction --momentum --grid 5x5");
  REQUIRE(r.code == 0);
  CHECK(lines_of(r.out)[0] == "qz,q0,phi");
}

TEST_CASE("wavefunction momentum mode is ground-state only") {
  CHECK(run_cli("wavefunction --momentum --n 1").code == 3);
}

TEST_CASE("wavefunction rejects malformed grids and envelope violations") {
  CHECK(run_cli("wavefunction --grid bogus").code == 2);
  CHECK(run_cli("wavefunction --grid 1x5").code == 2);
  CHECK(run_cli("wavefunction --n -1").code == 2);
  CHECK(run_cli("wavefunction --n 13 --grid 5x5").code == 3);
  CHECK(run_cli("wavefunction --eta 5 --grid 5x5").code == 3);
}

TEST_CASE("wavefunction writes to a file when asked") {
  const std::string path = "/tmp/wignerlab_cli_test_field.csv";
  std::remove(path.c_str());
  const CliResult r =
      run_cli("wavefunction --grid 5x5 --out " + path);
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  FILE* f = std::fopen(path.c_str(), "rb");
  REQUIRE(f != nullptr);
  char head[9] = {};
  const std::size_t got = std::fread(head, 1, 8, f);
  std::fclose(f);
  std::remove(path.c_str());
  CHECK(got == 8);
  CHECK(std::string(head) == "z,t,psi\n");
}

TEST_CASE("usage errors") {
  CHECK(run_cli("").code == 2);
  CHECK(run_cli("frobnicate").code == 2);
  CHECK(run_cli("--help").code == 0);
  const CliResult v = run_cli("--version");
  CHECK(v.code == 0);
  CHECK(v.out.find("0.1.0") != std::string::npos);
}
