#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hardylab/acceptance.hpp"
#include "hardylab/errors.hpp"
#include "hardylab/report.hpp"
#include "hardylab/semigroup.hpp"
#include "hardylab/spectrum.hpp"

namespace {

using hardylab::ConfigError;

struct Options {
  std::string family;
  std::vector<std::string> params;
  std::vector<double> p_list;
  std::vector<double> times;
  int k_max = -1;
  std::string nu_grid_text;
  std::string axis;
  std::string out;
  std::string format;
  std::vector<std::string> tol_overrides;
};

std::map<std::string, double> parse_kv(const std::vector<std::string>& items,
                                       const std::string& flag) {
  std::map<std::string, double> kv;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw ConfigError(flag + " expects key=value, got: " + item);
    const std::string key = item.substr(0, eq);
    const std::string val = item.substr(eq + 1);
    try {
      size_t used = 0;
      const double v = std::stod(val, &used);
      if (used != val.size()) throw std::invalid_argument(val);
      kv[key] = v;
    } catch (const std::exception&) {
      throw ConfigError(flag + " value for " + key + " is not a number: " +
                        val);
    }
  }
  return kv;
}

hardylab::report::Tolerances tolerances_from(const Options& o) {
  auto tol = hardylab::report::Tolerances::defaults();
  for (const auto& [k, v] : parse_kv(o.tol_overrides, "--tol")) tol.set(k, v);
  return tol;
}

hardylab::semigroup::Family family_from(const Options& o) {
  if (o.family.empty()) throw ConfigError("--family is required");
  try {
    return hardylab::semigroup::family_lookup(
        o.family, parse_kv(o.params, "--param"));
  } catch (const hardylab::ParamError& e) {
    throw ConfigError(e.what());
  }
}

hardylab::spectrum::NuGrid grid_from(const Options& o) {
  if (o.nu_grid_text.empty()) return hardylab::spectrum::default_nu_grid();
  try {
    return hardylab::spectrum::parse_nu_grid(o.nu_grid_text);
  } catch (const hardylab::ParamError& e) {
    throw ConfigError(e.what());
  }
}

double single_p(const Options& o) {
  if (o.p_list.empty()) return 2.0;
  if (!(o.p_list.front() > 0)) throw ConfigError("p must be positive");
  return o.p_list.front();
}

void write_output(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(out, std::ios::binary);
  if (!file) throw ConfigError("cannot open output file: " + out);
  file << text;
}

void check_format(const Options& o, const std::string& expected) {
  if (!o.format.empty() && o.format != expected)
    throw ConfigError("this command emits " + expected + ", not " + o.format);
}

void add_common(CLI::App* cmd, Options& o, bool wants_family = true) {
  if (wants_family) {
    cmd->add_option("--family", o.family, "catalog family name");
    cmd->add_option("--param", o.params, "family parameter key=value");
  }
  cmd->add_option("--out", o.out, "output path (default stdout)");
  cmd->add_option("--format", o.format, "output format: json or csv");
  cmd->add_option("--tol", o.tol_overrides, "tolerance override key=value");
}

int emit_report(const hardylab::report::Outcome& outcome,
                const std::string& out) {
  write_output(outcome.doc.dump(), out);
  if (outcome.failures.empty()) return 0;
  std::cerr << "failed checks:";
  for (const auto& f : outcome.failures) std::cerr << ' ' << f;
  std::cerr << '\n';
  return 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "hardylab: composition semigroups on Hardy spaces of the upper "
      "half-plane"};
  app.require_subcommand(1);

  Options o;
  auto* analyze = app.add_subcommand(
      "analyze", "full family report: law, generator, boundedness, norms");
  add_common(analyze, o);
  analyze->add_option("--p", o.p_list, "Hardy exponent");
  analyze->add_option("--t", o.times, "time values");
  analyze->add_option("--k-max", o.k_max,
                      "request a spectrum scan up to this power");
  analyze->add_option("--nu-grid", o.nu_grid_text,
                      "request a spectrum scan: re0:re1:n,im0:im1:n");

  auto* norm = app.add_subcommand(
      "norm", "operator norms with empirical lower bounds");
  add_common(norm, o);
  norm->add_option("--p", o.p_list, "Hardy exponent");
  norm->add_option("--t", o.times, "time values");

  auto* sgc = app.add_subcommand("semigroup-check",
                                 "composition-law and identity residuals");
  add_common(sgc, o);

  auto* spec = app.add_subcommand("spectrum",
                                  "point spectrum of the generator");
  add_common(spec, o);
  spec->add_option("--p", o.p_list, "Hardy exponent");
  spec->add_option("--k-max", o.k_max, "power scan bound (interior case)");
  spec->add_option("--nu-grid", o.nu_grid_text,
                   "exponent grid (boundary case): re0:re1:n,im0:im1:n");

  auto* sweep = app.add_subcommand("sweep", "CSV sweep along one axis");
  add_common(sweep, o);
  sweep->add_option("--axis", o.axis, "sweep axis: t, p, n, or nu");
  sweep->add_option("--p", o.p_list, "Hardy exponent(s)");
  sweep->add_option("--t", o.times, "time values");
  sweep->add_option("--k-max", o.k_max, "largest n for the n axis");
  sweep->add_option("--nu-grid", o.nu_grid_text,
                    "nu axis grid: re0:re1:n,im0:im1:n");

  auto* suite = app.add_subcommand("suite", "run the acceptance battery");
  add_common(suite, o, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const auto tol = tolerances_from(o);

    if (analyze->parsed()) {
      check_format(o, "json");
      hardylab::report::SpectrumRequest req;
      if (o.k_max >= 0) req.k_max = o.k_max;
      if (!o.nu_grid_text.empty()) req.nu_grid = grid_from(o);
      const auto times = o.times.empty()
                             ? std::vector<double>{1.0, 0.1, 0.01, 0.001}
                             : o.times;
      return emit_report(hardylab::report::analyze_report(
                             family_from(o), single_p(o), times, tol, req),
                         o.out);
    }
    if (norm->parsed()) {
      check_format(o, "json");
      const auto times =
          o.times.empty() ? std::vector<double>{0.25, 0.5, 1.0} : o.times;
      return emit_report(hardylab::report::norm_report(family_from(o),
                                                       single_p(o), times, tol),
                         o.out);
    }
    if (sgc->parsed()) {
      check_format(o, "json");
      return emit_report(
          hardylab::report::semigroup_check_report(family_from(o), tol), o.out);
    }
    if (spec->parsed()) {
      check_format(o, "json");
      const auto grid = grid_from(o);
      const int k_max = o.k_max >= 0 ? o.k_max : 20;
      return emit_report(
          hardylab::report::spectrum_report(family_from(o), single_p(o), k_max,
                                            grid, tol),
          o.out);
    }
    if (sweep->parsed()) {
      check_format(o, "csv");
      if (o.axis.empty()) throw ConfigError("--axis is required for sweep");
      const auto grid = grid_from(o);
      const int n_max = o.k_max >= 0 ? o.k_max : 10;
      write_output(hardylab::report::sweep_csv(family_from(o), o.axis,
                                               o.p_list, o.times, n_max, grid),
                   o.out);
      return 0;
    }
    if (suite->parsed()) {
      if (!o.format.empty())
        throw ConfigError("suite emits fixed one-line-per-criterion text");
      if (o.out.empty()) {
        const auto results = hardylab::acceptance::run_all(std::cout);
        return hardylab::acceptance::all_passed(results) ? 0 : 3;
      }
      std::ofstream file(o.out, std::ios::binary);
      if (!file) throw ConfigError("cannot open output file: " + o.out);
      const auto results = hardylab::acceptance::run_all(file);
      return hardylab::acceptance::all_passed(results) ? 0 : 3;
    }
  } catch (const ConfigError& e) {
    std::cerr << "{\"error\": {\"kind\": \"ConfigError\", \"message\": "
              << hardylab::report::escape_string(e.what()) << "}}\n";
    return 2;
  } catch (const hardylab::Error& e) {
    std::cerr << "{\"error\": {\"kind\": \"ComputeError\", \"message\": "
              << hardylab::report::escape_string(e.what()) << "}}\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "{\"error\": {\"kind\": \"Internal\", \"message\": "
              << hardylab::report::escape_string(e.what()) << "}}\n";
    return 3;
  }
  return 2;
}
