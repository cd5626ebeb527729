#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "hardylab/errors.hpp"
#include "hardylab/report.hpp"
#include "hardylab/semigroup.hpp"

using namespace hardylab;
using report::Json;

namespace {

semigroup::Family family(const char* name,
                         std::map<std::string, double> params = {}) {
  return semigroup::family_lookup(name, params);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  const std::string tag = std::to_string(counter++);
  const std::string out_path = "cli_stdout_" + tag + ".txt";
  const std::string err_path = "cli_stderr_" + tag + ".txt";
  const std::string cmd = std::string(HARDYLAB_CLI_PATH) + " " + args + " > " +
                          out_path + " 2> " + err_path;
  const int raw = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return r;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_SUITE("report") {

TEST_CASE("json dump is sorted, stable, and prints reals at full precision") {
  Json doc = Json::object();
  doc["beta"] = Json::integer(3);
  doc["alpha"] = Json::real(0.1);
  doc["gamma"] = Json::str("s");
  const std::string text = doc.dump();
  const auto pa = text.find("\"alpha\"");
  const auto pb = text.find("\"beta\"");
  const auto pg = text.find("\"gamma\"");
  REQUIRE(pa != std::string::npos);
  CHECK(pa < pb);
  CHECK(pb < pg);
  CHECK(contains(text, "0.10000000000000001"));
  CHECK(text == doc.dump());

  CHECK(report::format_real(0.1) == "0.10000000000000001");
  CHECK(report::format_real(1.0) == "1");
  CHECK(contains(Json::real(std::nan("")).dump(), "null"));

  CHECK(report::escape_string("a\nb\"c") == "\"a\\nb\\\"c\"");

  const Json z = report::complex_json({1.5, -2.0});
  CHECK(z.find("re") != nullptr);
  CHECK(z.find("im") != nullptr);
  CHECK(z.find("re")->as_real() == 1.5);
}

TEST_CASE("tolerance table validates keys") {
  auto tol = report::Tolerances::defaults();
  CHECK(tol.get("law") == 1e-9);
  tol.set("law", 1e-6);
  CHECK(tol.get("law") == 1e-6);
  CHECK_THROWS_AS(tol.set("bogus", 1.0), ConfigError);
  CHECK_THROWS_AS((void)tol.get("bogus"), ConfigError);
}

TEST_CASE("semigroup check report is clean for the translation flow") {
  const auto outcome = report::semigroup_check_report(
      family("translation", {{"b", 1.0}}), report::Tolerances::defaults());
  CHECK(outcome.failures.empty());
  REQUIRE(outcome.doc.find("family") != nullptr);
  CHECK(outcome.doc.find("family")->find("name")->as_str() == "translation");
  REQUIRE(outcome.doc.find("checks") != nullptr);
  CHECK_FALSE(outcome.doc.find("checks")->items().empty());
  CHECK(outcome.doc.find("schema_version")->as_str() == "1.0");
}

TEST_CASE("analyze report carries rates, norms, and continuity") {
  const auto outcome = report::analyze_report(
      family("dilation", {{"c", 1.0}}), 2.0, {1.0, 0.5},
      report::Tolerances::defaults(), {});
  CHECK(outcome.failures.empty());
  const Json& doc = outcome.doc;
  REQUIRE(doc.find("boundedness") != nullptr);
  CHECK(doc.find("boundedness")->find("verdict")->as_str() == "Bounded");
  REQUIRE(doc.find("generator") != nullptr);
  REQUIRE(doc.find("generator")->find("delta") != nullptr);
  CHECK(std::abs(doc.find("generator")->find("delta")->as_real() - 1.0) <
        1e-3);
  REQUIRE(doc.find("norms") != nullptr);
  const auto& rows = doc.find("norms")->items();
  REQUIRE(rows.size() == 2);
  CHECK(std::abs(rows[0].find("norm")->as_real() - std::exp(-0.5)) < 1e-4);
  CHECK(doc.find("spectrum") == nullptr);  // not requested
  REQUIRE(doc.find("continuity") != nullptr);
}

TEST_CASE("norm report certifies the measured against the formula") {
  const auto outcome =
      report::norm_report(family("dilation", {{"c", 1.0}}), 2.0,
                          {0.25, 0.5, 1.0}, report::Tolerances::defaults());
  CHECK(outcome.failures.empty());
  REQUIRE(outcome.doc.find("empirical_max_rel_gap") != nullptr);
  CHECK(outcome.doc.find("empirical_max_rel_gap")->as_real() < 1e-3);
}

TEST_CASE("spectrum report embeds the scan verdicts") {
  spectrum::NuGrid grid;
  grid.re_min = -1.0;
  grid.re_max = 1.0;
  grid.n_re = 3;
  grid.im_min = -1.0;
  grid.im_max = 1.0;
  grid.n_im = 3;
  const auto outcome =
      report::spectrum_report(family("translation", {{"b", 1.0}}), 2.0, 5,
                              grid, report::Tolerances::defaults());
  CHECK(outcome.failures.empty());
  const Json* spec_doc = outcome.doc.find("spectrum");
  REQUIRE(spec_doc != nullptr);
  CHECK(spec_doc->find("sigma_pi")->items().empty());
  CHECK(spec_doc->find("candidates")->items().size() == 9);
}

TEST_CASE("sweep emits one measured row per axis value") {
  const auto csv = report::sweep_csv(family("dilation", {{"c", 1.0}}), "t",
                                     {2.0}, {0.5, 1.0}, 10,
                                     spectrum::default_nu_grid());
  std::istringstream lines(csv);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "axis,measured,predicted,abs_error");
  std::string row;
  std::getline(lines, row);
  const auto c1 = row.find(',');
  const auto c2 = row.find(',', c1 + 1);
  CHECK(std::stod(row.substr(0, c1)) == 0.5);
  const double measured = std::stod(row.substr(c1 + 1, c2 - c1 - 1));
  const double predicted = std::stod(row.substr(c2 + 1));
  CHECK(std::abs(predicted - std::exp(-0.25)) < 1e-6);
  CHECK(std::abs(measured - predicted) < 1e-3);

  CHECK_THROWS_AS((void)report::sweep_csv(family("dilation", {{"c", 1.0}}),
                                          "q", {2.0}, {1.0}, 10,
                                          spectrum::default_nu_grid()),
                  ConfigError);
  CHECK_THROWS_AS((void)report::sweep_csv(family("dilation", {{"c", 1.0}}),
                                          "t", {2.0}, {}, 10,
                                          spectrum::default_nu_grid()),
                  ConfigError);
  CHECK_THROWS_AS((void)report::sweep_csv(family("example1"), "nu", {2.0},
                                          {1.0}, 10,
                                          spectrum::default_nu_grid()),
                  ConfigError);
}

}  // TEST_SUITE

TEST_SUITE("cli") {

TEST_CASE("analyze runs clean and is byte deterministic") {
  const std::string args =
      "analyze --family dilation --param c=1 --p 2 --t 1 --t 0.5";
  const auto first = run_cli(args);
  CHECK(first.code == 0);
  CHECK(contains(first.out, "\"schema_version\": \"1.0\""));
  CHECK(contains(first.out, "\"delta\""));
  const auto second = run_cli(args);
  CHECK(second.code == 0);
  CHECK(first.out == second.out);
}

TEST_CASE("config mistakes exit with code two") {
  const auto unknown = run_cli("analyze --family nope");
  CHECK(unknown.code == 2);
  CHECK(contains(unknown.err, "ConfigError"));

  CHECK(run_cli("sweep --family dilation --param c=1").code == 2);
  CHECK(run_cli("semigroup-check --family trivial --tol bogus=1").code == 2);
  CHECK(run_cli("spectrum --family translation --param b=1 --nu-grid zzz")
            .code == 2);
  CHECK(run_cli("norm --family translation --param b=1 --format csv").code ==
        2);
  CHECK(run_cli("").code == 2);  // a subcommand is required
}

TEST_CASE("compute refusals exit with code three") {
  const auto r = run_cli("spectrum --family example1 --p 2 --k-max 3");
  CHECK(r.code == 3);
  CHECK(contains(r.err, "ComputeError"));
}

TEST_CASE("sweep writes csv to a file") {
  const std::string path = "cli_sweep_out.csv";
  const auto r = run_cli(
      "sweep --family dilation --param c=1 --axis t --t 0.5 --t 1 "
      "--format csv --out " + path);
  CHECK(r.code == 0);
  const std::string text = slurp(path);
  CHECK(contains(text, "axis,measured,predicted,abs_error"));
  std::remove(path.c_str());
}

TEST_CASE("help is a successful exit") {
  CHECK(run_cli("--help").code == 0);
}

}  // TEST_SUITE
