#include "support.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "mixrec/cli.hpp"

using namespace mixrec;
using json = cli::json;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "mixrec");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Result r;
  r.code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  // run() installs its own precision and restores ours on exit
  return r;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("mixrec_test_" + name)).string();
}

}  // namespace

TEST_CASE("zeros as CSV", "[cli]") {
  const auto r = run({"zeros", "--family", "ch", "--n", "5", "--p", "2", "--q", "1", "--r", "4", "--s", "3"});
  REQUIRE(r.code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0] == "index,zero,residual");
  CHECK(rows[1].rfind("1,-4.4448", 0) == 0);
  CHECK(rows[5].rfind("5,0.7497", 0) == 0);
}

TEST_CASE("zeros with a pi fraction", "[cli]") {
  for (const char* phi : {"0.7853981633974483", "pi/4"}) {
    const auto r = run({"zeros", "--family", "mp", "--n", "1", "--lambda", "1", "--phi", phi});
    REQUIRE(r.code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 2);
    const double z = std::stod(rows[1].substr(2, rows[1].find(',', 2) - 2));
    CHECK(std::abs(z + 1) < 1e-15);
  }
}

TEST_CASE("zeros as JSON", "[cli]") {
  const auto r = run({"zeros", "--family", "pj", "--n", "4", "--a", "-7.5", "--b", "1", "--format", "json",
                      "--no-timestamp"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["command"] == "zeros");
  CHECK(j["entries"].size() == 4);
  CHECK_FALSE(j.contains("wall_ms"));
}

TEST_CASE("exit codes", "[cli]") {
  CHECK(run({"zeros", "--family", "mp", "--n", "0", "--lambda", "1", "--phi", "1"}).code == 2);
  CHECK(run({"zeros", "--family", "xx", "--n", "2"}).code == 2);
  CHECK(run({"zeros", "--family", "mp", "--n", "2", "--lambda", "-1", "--phi", "1"}).code == 2);
  CHECK(run({"zeros", "--family", "mp", "--n", "2", "--lambda", "abc", "--phi", "1"}).code == 2);
  CHECK(run({"verify", "--id", "NOPE", "--n", "3"}).code == 2);
  CHECK(run({"verify", "--prop", "nope", "--n", "3"}).code == 2);
  CHECK(run({"sweep", "--suite", "identities", "--count", "0"}).code == 2);
  CHECK(run({"sweep", "--suite", "unknown", "--count", "3"}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"verify", "--id", "CH_1", "--n", "3", "--p", "2", "--q", "1", "--r", "4", "--s", "3", "--fixture",
             "degenerate-u"})
            .code == 4);
}

TEST_CASE("non-convergence maps to exit code 3", "[cli]") {
  const std::string cfg = temp_path("iter.cfg");
  {
    std::ofstream f(cfg);
    f << "max_iterations = 1\n";
  }
  const auto r = run({"zeros", "--config", cfg, "--family", "ch", "--n", "12", "--p", "1", "--q", "2", "--r", "3",
                      "--s", "-1"});
  CHECK(r.code == 3);
  std::remove(cfg.c_str());
}

TEST_CASE("verify an identity", "[cli]") {
  const auto r = run({"verify", "--id", "MP_111", "--n", "6", "--lambda", "2", "--phi", "1.0", "--no-timestamp"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["summary"]["passed"] == 1);
  CHECK(j["entries"][0]["passed"] == true);
  CHECK(j["entries"][0]["max_point_residual"].get<double>() < 1e-30);
}

TEST_CASE("verify a proposition reports A", "[cli]") {
  const auto r = run({"verify", "--prop", "conthahn1-i", "--n", "5", "--p", "2", "--q", "1", "--r", "4", "--s", "3"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  const auto& e = j["entries"][0];
  CHECK(e["ok"] == true);
  CHECK(std::llround(e["A"].get<double>() * 1000) == -636);
  CHECK(e["completion_case"] == "i2");
  CHECK(j.contains("wall_ms"));
}

TEST_CASE("hypothesis violations exit with 2", "[cli]") {
  CHECK(run({"verify", "--prop", "pj-ii", "--n", "3", "--a", "-2", "--b", "1"}).code == 2);
  CHECK(run({"verify", "--prop", "conthahn-i", "--n", "3", "--p", "2", "--q", "0", "--r", "4", "--s", "0"}).code == 2);
}

TEST_CASE("sweeps are deterministic", "[cli]") {
  const std::vector<std::string> base = {"sweep", "--suite", "propositions", "--seed", "4",
                                         "--count", "3", "--n-max", "6", "--no-timestamp"};
  auto with_jobs = [&](const char* jobs) {
    auto args = base;
    args.push_back("--jobs");
    args.push_back(jobs);
    return run(args);
  };
  const auto a = with_jobs("1");
  const auto b = with_jobs("1");
  const auto c = with_jobs("3");
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
  const auto j = json::parse(a.out);
  CHECK(j["entries"].size() == 30);
  const auto& s = j["summary"];
  CHECK(s["passed"].get<int>() + s["failed"].get<int>() + s["skipped"].get<int>() == 30);
  std::vector<std::string> keys;
  for (const auto& e : j["entries"]) keys.push_back(e["cell"]);
  CHECK(std::is_sorted(keys.begin(), keys.end()));

  auto other = base;
  other[4] = "5";
  CHECK(run(other).out != a.out);
}

TEST_CASE("identity sweep passes", "[cli]") {
  const auto r = run({"sweep", "--suite", "identities", "--seed", "7", "--count", "5", "--n-max", "9"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["summary"]["passed"] == 45);
}

TEST_CASE("exploratory suite always exits 0", "[cli]") {
  const auto r = run({"sweep", "--suite", "exploratory-mp-open-question", "--seed", "1", "--count", "10",
                      "--n-max", "8"});
  CHECK(r.code == 0);
  for (const auto& e : json::parse(r.out)["entries"]) CHECK(e["type"] == "observation");
}

TEST_CASE("report written to --output", "[cli]") {
  const std::string path = temp_path("report.json");
  const auto r = run({"verify", "--id", "PJ_4", "--n", "3", "--a", "-6", "--b", "0.5", "--output", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  REQUIRE(in);
  const auto j = json::parse(in);
  CHECK(j["entries"][0]["id"] == "PJ_4");
  std::remove(path.c_str());
}

TEST_CASE("config file and flag precedence", "[cli]") {
  const std::string cfg = temp_path("prec.cfg");
  {
    std::ofstream f(cfg);
    f << "# precision settings\nprecision_digits = 60\nresidual_tol = 1e-12\nseed = 9\n";
  }
  const auto from_file = json::parse(
      run({"verify", "--config", cfg, "--id", "MP_111", "--n", "2", "--lambda", "1", "--phi", "1"}).out);
  CHECK(from_file["config"]["working_digits"] == 60);
  CHECK(from_file["config"]["residual_tol"] == 1e-12);
  CHECK(from_file["config"]["seed"] == 9);

  const auto overridden = json::parse(run({"verify", "--config", cfg, "--precision-digits", "40", "--id", "MP_111",
                                           "--n", "2", "--lambda", "1", "--phi", "1"})
                                          .out);
  CHECK(overridden["config"]["working_digits"] == 40);
  CHECK(overridden["config"]["residual_tol"] == 1e-12);

  {
    std::ofstream f(cfg);
    f << "colour = blue\n";
  }
  CHECK(run({"verify", "--config", cfg, "--id", "MP_111", "--n", "2", "--lambda", "1", "--phi", "1"}).code == 2);
  std::remove(cfg.c_str());
  CHECK(run({"zeros", "--precision-digits", "10", "--family", "mp", "--n", "2", "--lambda", "1", "--phi", "1"}).code ==
        2);
}

TEST_CASE("number syntax", "[cli]") {
  using test_support::rel_diff;
  const real p = pi<real>();
  CHECK(rel_diff(cli::parse_real("pi/4"), p / 4) < 1e-45);
  CHECK(rel_diff(cli::parse_real("3*pi/4"), 3 * p / 4) < 1e-45);
  CHECK(rel_diff(cli::parse_real("-pi/2"), -p / 2) < 1e-45);
  CHECK(rel_diff(cli::parse_real("2pi"), 2 * p) < 1e-45);
  CHECK(rel_diff(cli::parse_real("pi"), p) < 1e-45);
  CHECK(cli::parse_real("1e-3") == real("0.001"));
  CHECK(cli::parse_real("-.5") == real("-0.5"));
  CHECK_THROWS_AS(cli::parse_real("abc"), Error);
  CHECK_THROWS_AS(cli::parse_real("pi/0"), Error);
  CHECK_THROWS_AS(cli::parse_real("1.2.3"), Error);
}

TEST_CASE("reproduce the worked examples", "[cli]") {
  const auto r = run({"reproduce-paper"});
  CHECK(r.code == 0);
  CHECK(r.out.find("NO") == std::string::npos);
  const auto rows = cli::reproduce_examples(test_support::config());
  CHECK(rows.size() == 37);
  for (const auto& row : rows) {
    INFO(row.quantity);
    CHECK(row.match);
  }
}

TEST_CASE("three-decimal comparison", "[cli]") {
  CHECK(cli::matches_three_decimals(real("0.74970070782299663"), 750));
  CHECK(cli::matches_three_decimals(real("-0.0000001"), 0));
  CHECK_FALSE(cli::matches_three_decimals(real("-0.6014957"), -602));
}
