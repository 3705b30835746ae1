#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code;
  std::string stdout_text;
};

RunResult run(const std::string& args) {
  const std::string out_file = "cli_test_stdout.tmp";
  const std::string cmd =
      std::string(OSPXP_CLI_PATH) + " " + args + " > " + out_file + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  std::ifstream f(out_file);
  std::stringstream ss;
  ss << f.rdbuf();
  std::remove(out_file.c_str());
  return {WEXITSTATUS(status), ss.str()};
}

}  // namespace

TEST_CASE("verify subcommand") {
  SUBCASE("admissible parameters pass with exit 0") {
    const auto r = run("verify --mu 1/4 --dim 32 --format text");
    CHECK(r.exit_code == 0);
    int lines = 0;
    std::istringstream is(r.stdout_text);
    std::string line;
    while (std::getline(is, line)) {
      CHECK(line.rfind("PASS", 0) == 0);
      ++lines;
    }
    CHECK(lines >= 17);
  }

  SUBCASE("mu = 0 is invalid input") {
    CHECK(run("verify --mu 0 --dim 32").exit_code == 2);
  }

  SUBCASE("dimension below minimum is invalid input") {
    CHECK(run("verify --mu 1/4 --dim 3").exit_code == 2);
  }

  SUBCASE("json format parses") {
    const auto r = run("verify --mu 1 --dim 16 --format json");
    CHECK(r.exit_code == 0);
    const json j = json::parse(r.stdout_text);
    CHECK(j.is_array());
    CHECK(j.size() >= 17);
  }
}

TEST_CASE("classify subcommand") {
  SUBCASE("one family at mu = 1/4") {
    const auto r = run("classify --mu 1/4");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.stdout_text);
    CHECK(j.at("mu") == "1/4");
    int admissible = 0;
    for (const auto& c : j.at("candidates"))
      if (c.at("admissible") == true && c.at("duplicate") == false)
        ++admissible;
    CHECK(admissible == 1);
  }

  SUBCASE("two equivalent families at mu = 1") {
    const auto r = run("classify --mu 1");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.stdout_text);
    bool equivalence_flagged = false;
    for (const auto& c : j.at("candidates"))
      if (c.at("family") == "EquivActions" && !c.at("equivalent_to_mu").is_null())
        equivalence_flagged = c.at("equivalent_to_mu") == "1/2";
    CHECK(equivalence_flagged);
  }

  SUBCASE("negative mu reports no families, exit 0") {
    const auto r = run("classify --mu -1");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.stdout_text);
    for (const auto& c : j.at("candidates")) CHECK(c.at("admissible") == false);
  }
}

TEST_CASE("spectrum subcommand") {
  SUBCASE("2x2 position system") {
    const auto r = run("spectrum --operator x --mu 1/4 --dim 2");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.stdout_text);
    const auto ev = j.at("eigenvalues").get<std::vector<double>>();
    REQUIRE(ev.size() == 2);
    CHECK(std::abs(ev[0] + std::sqrt(0.5)) < 1e-12);
    CHECK(std::abs(ev[1] - std::sqrt(0.5)) < 1e-12);
  }

  SUBCASE("H with both parities emits both blocks and the merged multiset") {
    const auto r = run("spectrum --operator H --mu 1 --parity both --dim 64");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.stdout_text);
    CHECK(j.contains("even"));
    CHECK(j.contains("odd"));
    CHECK(j.at("merged").size() == 128);
  }

  SUBCASE("p has the same spectrum as x") {
    const auto rx = run("spectrum --operator x --mu 1/4 --dim 40");
    const auto rp = run("spectrum --operator p --mu 1/4 --dim 40");
    REQUIRE(rx.exit_code == 0);
    REQUIRE(rp.exit_code == 0);
    const auto ex = json::parse(rx.stdout_text).at("eigenvalues").get<std::vector<double>>();
    const auto ep = json::parse(rp.stdout_text).at("eigenvalues").get<std::vector<double>>();
    REQUIRE(ex.size() == ep.size());
    for (std::size_t i = 0; i < ex.size(); ++i)
      CHECK(std::abs(ex[i] - ep[i]) < 1e-10);
  }

  SUBCASE("csv format") {
    const auto r = run("spectrum --operator x --mu 1 --dim 8 --format csv");
    REQUIRE(r.exit_code == 0);
    CHECK(r.stdout_text.rfind("label,index,eigenvalue", 0) == 0);
  }
}

TEST_CASE("recurrence subcommand") {
  const auto r = run("recurrence --operator x --mu 1/4 --dim 4 --t 0.3");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.stdout_text);
  const auto coeffs = j.at("coefficients").get<std::vector<double>>();
  REQUIRE(coeffs.size() == 5);
  CHECK(coeffs[0] == 1.0);
  CHECK(std::abs(coeffs[1] - 0.3 * std::sqrt(2.0)) < 1e-12);
}

TEST_CASE("equivalence subcommand") {
  const auto r = run("equivalence --mu 1 --dim 32");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.stdout_text);
  CHECK(j.at("equal") == true);
  CHECK(j.at("equivalent_mu") == "1/2");

  CHECK(run("equivalence --mu 1/4 --dim 32").exit_code == 2);
}

TEST_CASE("mu sweep merged deterministically") {
  setenv("OSP_SPECTRAL_THREADS", "2", 1);
  const auto r = run("classify --mu-list 1/4,1/2,1");
  unsetenv("OSP_SPECTRAL_THREADS");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.stdout_text);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 3);
  CHECK(j.at(0).at("mu") == "1/4");
  CHECK(j.at(1).at("mu") == "1/2");
  CHECK(j.at(2).at("mu") == "1");
}
