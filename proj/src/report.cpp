#include "hardylab/report.hpp"

#include <cmath>
#include <cstdio>
#include <utility>

#include "hardylab/errors.hpp"
#include "hardylab/hardy.hpp"
#include "hardylab/operators.hpp"

namespace hardylab::report {

namespace {

const char* kSchemaVersion = "1.0";

std::vector<std::pair<double, double>> law_pairs() {
  std::vector<std::pair<double, double>> pairs;
  const double ts[] = {0.1, 0.5, 1.0};
  for (double t : ts)
    for (double s : ts) pairs.emplace_back(t, s);
  return pairs;
}

// Annotates escaping numeric errors with the operation that failed so the
// CLI can name it in the machine-readable failure output.
template <typename F>
auto stage(const char* op, F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ComputeError(std::string(op) + ": " + e.what());
  }
}

std::string verdict_str(operators::Boundedness b) {
  switch (b) {
    case operators::Boundedness::Bounded: return "Bounded";
    case operators::Boundedness::Unbounded: return "Unbounded";
    default: return "Inconclusive";
  }
}

std::string membership_str(hardy::Membership m) {
  switch (m) {
    case hardy::Membership::Member: return "Member";
    case hardy::Membership::NonMember: return "NonMember";
    default: return "Inconclusive";
  }
}

Json dw_json(const semigroup::ExtendedPoint& dw) {
  Json j = Json::object();
  switch (dw.kind) {
    case semigroup::PointKind::Interior:
      j["kind"] = Json::str("interior");
      j["point"] = complex_json(dw.value);
      break;
    case semigroup::PointKind::BoundaryReal:
      j["kind"] = Json::str("boundary");
      j["x"] = Json::real(dw.value.real());
      break;
    default:
      j["kind"] = Json::str("infinity");
      break;
  }
  return j;
}

Json family_json(const semigroup::Family& fam) {
  Json j = Json::object();
  j["name"] = Json::str(fam.name);
  Json params = Json::object();
  for (const auto& [k, v] : fam.params) params[k] = Json::real(v);
  j["params"] = std::move(params);
  return j;
}

Json check_json(const Check& c) {
  Json j = Json::object();
  j["name"] = Json::str(c.name);
  j["measured"] = Json::real(c.measured);
  j["tolerance"] = Json::real(c.tolerance);
  j["pass"] = Json::boolean(c.pass);
  if (!c.note.empty()) j["note"] = Json::str(c.note);
  return j;
}

Json spectrum_json(const spectrum::SpectrumReport& sr) {
  Json j = Json::object();
  j["family"] = Json::str(sr.family);
  j["p"] = Json::real(sr.p);
  j["dw_kind"] = Json::str(sr.dw_kind == semigroup::PointKind::Interior
                               ? "interior"
                               : "boundary");
  j["scan"] = Json::str(sr.scan);
  Json cands = Json::array();
  for (const auto& c : sr.candidates) {
    Json cj = Json::object();
    cj["eigenvalue"] = complex_json(c.eigenvalue);
    cj["eigenfunction"] = Json::str(c.eigenfunction);
    cj["verdict"] = Json::str(membership_str(c.verdict));
    if (c.residual_checked) {
      cj["ode_residual"] = Json::real(c.ode_residual);
      cj["flow_residual"] = Json::real(c.flow_residual);
    }
    if (!c.note.empty()) cj["note"] = Json::str(c.note);
    cands.push_back(std::move(cj));
  }
  j["candidates"] = std::move(cands);
  Json sp = Json::array();
  for (const auto& ev : sr.sigma_pi) sp.push_back(complex_json(ev));
  j["sigma_pi"] = std::move(sp);
  return j;
}

void finish(Outcome& out, const std::vector<Check>& checks,
            const Tolerances& tol) {
  Json arr = Json::array();
  for (const auto& c : checks) {
    arr.push_back(check_json(c));
    if (!c.pass) out.failures.push_back(c.name);
  }
  out.doc["checks"] = std::move(arr);
  Json fj = Json::array();
  for (const auto& name : out.failures) fj.push_back(Json::str(name));
  out.doc["failures"] = std::move(fj);
  Json tj = Json::object();
  for (const auto& [k, v] : tol.values()) tj[k] = Json::real(v);
  out.doc["tolerances"] = std::move(tj);
  out.doc["schema_version"] = Json::str(kSchemaVersion);
}

Check bounded_check(const std::string& name, double measured, double tol,
                    const std::string& note = "") {
  return Check{name, measured, tol, measured <= tol, note};
}

}  // namespace

Json Json::boolean(bool v) {
  Json j;
  j.kind_ = Kind::Bool;
  j.bool_ = v;
  return j;
}

Json Json::integer(long long v) {
  Json j;
  j.kind_ = Kind::Int;
  j.int_ = v;
  return j;
}

Json Json::real(double v) {
  Json j;
  j.kind_ = Kind::Real;
  j.real_ = v;
  return j;
}

Json Json::str(std::string v) {
  Json j;
  j.kind_ = Kind::Str;
  j.str_ = std::move(v);
  return j;
}

Json Json::array() {
  Json j;
  j.kind_ = Kind::Arr;
  return j;
}

Json Json::object() {
  Json j;
  j.kind_ = Kind::Obj;
  return j;
}

Json& Json::operator[](const std::string& key) {
  if (kind_ == Kind::Null) kind_ = Kind::Obj;
  return obj_[key];
}

void Json::push_back(Json v) {
  if (kind_ == Kind::Null) kind_ = Kind::Arr;
  arr_.push_back(std::move(v));
}

const Json* Json::find(const std::string& key) const {
  auto it = obj_.find(key);
  return it == obj_.end() ? nullptr : &it->second;
}

double Json::as_real() const {
  if (kind_ == Kind::Int) return static_cast<double>(int_);
  return real_;
}

std::string format_real(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string escape_string(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  out += '"';
  for (unsigned char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (c < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += static_cast<char>(c);
        }
    }
  }
  out += '"';
  return out;
}

Json complex_json(std::complex<double> z) {
  Json j = Json::object();
  j["re"] = Json::real(z.real());
  j["im"] = Json::real(z.imag());
  return j;
}

void Json::write(std::string& out, int indent, int depth) const {
  const std::string pad(static_cast<size_t>(indent) * (depth + 1), ' ');
  const std::string close_pad(static_cast<size_t>(indent) * depth, ' ');
  switch (kind_) {
    case Kind::Null: out += "null"; break;
    case Kind::Bool: out += bool_ ? "true" : "false"; break;
    case Kind::Int: out += std::to_string(int_); break;
    case Kind::Real: out += format_real(real_); break;
    case Kind::Str: out += escape_string(str_); break;
    case Kind::Arr: {
      if (arr_.empty()) {
        out += "[]";
        break;
      }
      out += "[\n";
      for (size_t i = 0; i < arr_.size(); ++i) {
        out += pad;
        arr_[i].write(out, indent, depth + 1);
        if (i + 1 < arr_.size()) out += ',';
        out += '\n';
      }
      out += close_pad + "]";
      break;
    }
    case Kind::Obj: {
      if (obj_.empty()) {
        out += "{}";
        break;
      }
      out += "{\n";
      size_t i = 0;
      for (const auto& [k, v] : obj_) {
        out += pad + escape_string(k) + ": ";
        v.write(out, indent, depth + 1);
        if (++i < obj_.size()) out += ',';
        out += '\n';
      }
      out += close_pad + "}";
      break;
    }
  }
}

std::string Json::dump(int indent) const {
  std::string out;
  write(out, indent, 0);
  out += '\n';
  return out;
}

Tolerances Tolerances::defaults() {
  Tolerances t;
  t.values_ = {
      {"identity", 1e-12},        {"law", 1e-9},
      {"generator_match", 1e-6},  {"flow_identity", 1e-5},
      {"sign", 1e-9},             {"norm_consistency", 1e-6},
      {"phi1_delta", 1e-3},       {"multiplicativity", 1e-9},
      {"empirical", 1e-3},        {"model_residual", 1e-6},
      {"eigen_residual", 1e-6},
  };
  return t;
}

double Tolerances::get(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) throw ConfigError("unknown tolerance key: " + key);
  return it->second;
}

void Tolerances::set(const std::string& key, double value) {
  auto it = values_.find(key);
  if (it == values_.end()) throw ConfigError("unknown tolerance key: " + key);
  if (!(value > 0)) throw ConfigError("tolerance must be positive: " + key);
  it->second = value;
}

Outcome analyze_report(const semigroup::Family& fam, double p,
                       const std::vector<double>& times,
                       const Tolerances& tol,
                       const SpectrumRequest& spectrum_req) {
  if (!(p > 0)) throw ConfigError("p must be positive");
  for (double t : times)
    if (t < 0) throw ConfigError("times must be nonnegative");

  Outcome out;
  out.doc = Json::object();
  out.doc["command"] = Json::str("analyze");
  out.doc["family"] = family_json(fam);
  out.doc["p"] = Json::real(p);
  Json tv = Json::array();
  for (double t : times) tv.push_back(Json::real(t));
  out.doc["times"] = std::move(tv);

  std::vector<Check> checks;
  const auto grid = semigroup::default_grid(10);
  checks.push_back(bounded_check(
      "identity_residual",
      stage("identity_residual",
            [&] { return semigroup::identity_residual(fam, grid); }),
      tol.get("identity")));
  checks.push_back(bounded_check(
      "law_residual",
      stage("semigroup_law", [&] {
        return semigroup::semigroup_law_residual(fam, grid, law_pairs());
      }),
      tol.get("law")));

  const auto bres = stage("classify_boundedness", [&] {
    return operators::classify_boundedness(fam, p);
  });
  {
    Json b = Json::object();
    b["verdict"] = Json::str(verdict_str(bres.verdict));
    b["phi1_inf"] = Json::real(bres.phi1_inf);
    b["contraction"] = Json::boolean(bres.contraction);
    if (bres.delta) b["delta"] = Json::real(*bres.delta);
    if (!bres.note.empty()) b["note"] = Json::str(bres.note);
    out.doc["boundedness"] = std::move(b);
  }

  if (!fam.trivial) {
    auto info = stage("generator", [&] { return semigroup::generator(fam); });
    out.doc["dw"] = dw_json(info.dw);
    Json g = Json::object();
    g["closed_form"] = Json::boolean(info.closed_form);
    if (info.closed_form) {
      checks.push_back(bounded_check("generator_match", info.cross_check,
                                     tol.get("generator_match")));
      g["cross_check"] = Json::real(info.cross_check);
    }
    checks.push_back(bounded_check("flow_identity", info.flow_residual,
                                   tol.get("flow_identity")));
    g["flow_residual"] = Json::real(info.flow_residual);
    if (!info.delta) {
      try {
        semigroup::delta_limit(info);
      } catch (const Error& e) {
        g["delta_note"] = Json::str(e.what());
      }
    }
    if (info.delta) g["delta"] = Json::real(*info.delta);
    if (info.dw.kind != semigroup::PointKind::BoundaryReal) {
      const double s = stage("sign_condition", [&] {
        return semigroup::sign_condition_min(info, grid);
      });
      const double st = tol.get("sign");
      checks.push_back(Check{"sign_condition", s, st, s >= -st,
                             info.dw.kind == semigroup::PointKind::Interior
                                 ? "min Im F over the grid"
                                 : "min Im G over the grid"});
      g["sign_condition_min"] = Json::real(s);
    }
    out.doc["generator"] = std::move(g);
  }

  if (bres.verdict == operators::Boundedness::Bounded) {
    Json norms = Json::array();
    double worst_consistency = 0.0;
    for (double t : times) {
      const double formula = operators::norm_from_rate(bres.phi1_inf, p, t);
      Json row = Json::object();
      row["t"] = Json::real(t);
      row["norm"] = Json::real(formula);
      if (bres.delta) {
        const double rate = std::exp(-(*bres.delta) * t / p);
        worst_consistency = std::max(
            worst_consistency, std::abs(formula - rate) / std::max(1.0, rate));
      }
      norms.push_back(std::move(row));
    }
    out.doc["norms"] = std::move(norms);
    if (bres.delta && !times.empty())
      checks.push_back(bounded_check("norm_consistency", worst_consistency,
                                     tol.get("norm_consistency"),
                                     "formula vs e^{-delta t/p}"));
    if (!times.empty()) {
      const double t1 = times.front(), t2 = times.back();
      const double lhs = operators::norm_from_rate(bres.phi1_inf, p, t1 + t2);
      const double rhs = operators::norm_from_rate(bres.phi1_inf, p, t1) *
                         operators::norm_from_rate(bres.phi1_inf, p, t2);
      checks.push_back(bounded_check("multiplicativity",
                                     std::abs(lhs - rhs) / std::max(1e-300, lhs),
                                     tol.get("multiplicativity")));
    }
    if (p >= 1.0 && !times.empty()) {
      const auto probe = stage("strong_continuity", [&] {
        return operators::strong_continuity_probe(
            fam, hardy::h_lambda({-2.0 / p, 0.0}), p, times);
      });
      Json rows = Json::array();
      for (size_t i = 0; i < probe.t.size(); ++i) {
        Json row = Json::object();
        row["t"] = Json::real(probe.t[i]);
        row["residual"] = Json::real(probe.residual[i]);
        rows.push_back(std::move(row));
      }
      Json c = Json::object();
      c["f_norm"] = Json::real(probe.f_norm);
      c["probe"] = Json::str("h_lambda(-2/p)");
      c["rows"] = std::move(rows);
      out.doc["continuity"] = std::move(c);
    }
  } else {
    out.doc["norms"] = Json::array();
  }

  if (spectrum_req.requested()) {
    if (bres.verdict == operators::Boundedness::Bounded) {
      const int k_max = spectrum_req.k_max.value_or(20);
      const auto grid_nu =
          spectrum_req.nu_grid.value_or(spectrum::default_nu_grid());
      const auto sr = stage("point_spectrum", [&] {
        return spectrum::point_spectrum(fam, p, k_max, grid_nu);
      });
      out.doc["spectrum"] = spectrum_json(sr);
      double worst = 0.0;
      for (const auto& c : sr.candidates)
        if (c.residual_checked)
          worst = std::max(worst, std::max(c.ode_residual, c.flow_residual));
      checks.push_back(bounded_check("sigma_pi_residuals", worst,
                                     tol.get("eigen_residual")));
    } else {
      Json sj = Json::object();
      sj["error"] = Json::str("UnboundedOperator");
      out.doc["spectrum"] = std::move(sj);
    }
  }

  finish(out, checks, tol);
  return out;
}

Outcome norm_report(const semigroup::Family& fam, double p,
                    const std::vector<double>& times, const Tolerances& tol) {
  if (!(p > 0)) throw ConfigError("p must be positive");
  if (times.empty()) throw ConfigError("norm needs at least one --t");

  Outcome out;
  out.doc = Json::object();
  out.doc["command"] = Json::str("norm");
  out.doc["family"] = family_json(fam);
  out.doc["p"] = Json::real(p);

  const auto bres = stage("classify_boundedness", [&] {
    return operators::classify_boundedness(fam, p);
  });
  if (bres.verdict != operators::Boundedness::Bounded)
    throw ComputeError("operator_norm: family is not certified Bounded (" +
                       verdict_str(bres.verdict) + ")");
  out.doc["phi1_inf"] = Json::real(bres.phi1_inf);
  if (bres.delta) out.doc["delta"] = Json::real(*bres.delta);

  std::vector<Check> checks;
  const auto probe = hardy::h_lambda({-2.0 / p, 0.0});
  Json rows = Json::array();
  double worst_ratio = 0.0;
  double worst_match = 0.0;
  for (double t : times) {
    if (t < 0) throw ConfigError("times must be nonnegative");
    const double formula = operators::norm_from_rate(bres.phi1_inf, p, t);
    const double empirical = stage("empirical_norm_ratio", [&] {
      return operators::empirical_norm_ratio(fam, probe, p, t);
    });
    worst_ratio = std::max(worst_ratio, empirical / formula);
    worst_match =
        std::max(worst_match, std::abs(empirical - formula) / formula);
    Json row = Json::object();
    row["t"] = Json::real(t);
    row["formula"] = Json::real(formula);
    row["empirical"] = Json::real(empirical);
    rows.push_back(std::move(row));
  }
  out.doc["norms"] = std::move(rows);
  checks.push_back(Check{"empirical_below_formula", worst_ratio,
                         1.0 + tol.get("empirical"),
                         worst_ratio <= 1.0 + tol.get("empirical"),
                         "max empirical/formula over times"});
  out.doc["empirical_max_rel_gap"] = Json::real(worst_match);

  const double t1 = times.front(), t2 = times.back();
  const double lhs = operators::norm_from_rate(bres.phi1_inf, p, t1 + t2);
  const double rhs = operators::norm_from_rate(bres.phi1_inf, p, t1) *
                     operators::norm_from_rate(bres.phi1_inf, p, t2);
  checks.push_back(bounded_check("multiplicativity",
                                 std::abs(lhs - rhs) / std::max(1e-300, lhs),
                                 tol.get("multiplicativity")));
  if (bres.delta) {
    double worst = 0.0;
    for (double t : times) {
      const double formula = operators::norm_from_rate(bres.phi1_inf, p, t);
      const double rate = std::exp(-(*bres.delta) * t / p);
      worst = std::max(worst, std::abs(formula - rate) / std::max(1.0, rate));
    }
    checks.push_back(bounded_check("norm_consistency", worst,
                                   tol.get("norm_consistency")));
  }

  finish(out, checks, tol);
  return out;
}

Outcome semigroup_check_report(const semigroup::Family& fam,
                               const Tolerances& tol) {
  Outcome out;
  out.doc = Json::object();
  out.doc["command"] = Json::str("semigroup-check");
  out.doc["family"] = family_json(fam);

  std::vector<Check> checks;
  const auto grid = semigroup::default_grid(10);
  const double idr = stage("identity_residual", [&] {
    return semigroup::identity_residual(fam, grid);
  });
  const double law = stage("semigroup_law", [&] {
    return semigroup::semigroup_law_residual(fam, grid, law_pairs());
  });
  out.doc["identity_residual"] = Json::real(idr);
  out.doc["law_residual"] = Json::real(law);
  checks.push_back(bounded_check("identity_residual", idr,
                                 tol.get("identity")));
  checks.push_back(bounded_check("law_residual", law, tol.get("law")));
  if (!fam.trivial) {
    const auto info =
        stage("generator", [&] { return semigroup::generator(fam); });
    out.doc["dw"] = dw_json(info.dw);
    checks.push_back(bounded_check("flow_identity", info.flow_residual,
                                   tol.get("flow_identity")));
    if (info.closed_form)
      checks.push_back(bounded_check("generator_match", info.cross_check,
                                     tol.get("generator_match")));
  }

  finish(out, checks, tol);
  return out;
}

Outcome spectrum_report(const semigroup::Family& fam, double p, int k_max,
                        const spectrum::NuGrid& grid, const Tolerances& tol) {
  if (!(p > 0)) throw ConfigError("p must be positive");
  if (k_max < 0) throw ConfigError("k-max must be nonnegative");

  Outcome out;
  out.doc = Json::object();
  out.doc["command"] = Json::str("spectrum");
  out.doc["family"] = family_json(fam);

  const auto sr = stage("point_spectrum", [&] {
    return spectrum::point_spectrum(fam, p, k_max, grid);
  });
  out.doc["spectrum"] = spectrum_json(sr);

  std::vector<Check> checks;
  double worst = 0.0;
  for (const auto& c : sr.candidates)
    if (c.residual_checked)
      worst = std::max(worst, std::max(c.ode_residual, c.flow_residual));
  checks.push_back(bounded_check("sigma_pi_residuals", worst,
                                 tol.get("eigen_residual")));

  finish(out, checks, tol);
  return out;
}

std::string sweep_csv(const semigroup::Family& fam, const std::string& axis,
                      const std::vector<double>& p_values,
                      const std::vector<double>& times, int n_max,
                      const spectrum::NuGrid& grid) {
  std::string csv = "axis,measured,predicted,abs_error\n";
  auto row = [&csv](const std::string& axis_value, double measured,
                    double predicted) {
    csv += axis_value + ',' + format_real(measured) + ',' +
           format_real(predicted) + ',' +
           format_real(std::abs(measured - predicted)) + '\n';
  };

  if (axis == "t") {
    if (times.empty()) throw ConfigError("sweep over t needs --t values");
    const double p = p_values.empty() ? 2.0 : p_values.front();
    const auto probe = hardy::h_lambda({-2.0 / p, 0.0});
    for (double t : times) {
      const double predicted = stage("operator_norm", [&] {
        return operators::operator_norm(fam, p, t);
      });
      const double measured = stage("empirical_norm_ratio", [&] {
        return operators::empirical_norm_ratio(fam, probe, p, t);
      });
      row(format_real(t), measured, predicted);
    }
  } else if (axis == "p") {
    if (p_values.empty()) throw ConfigError("sweep over p needs --p values");
    const double t = times.empty() ? 1.0 : times.front();
    for (double p : p_values) {
      const auto probe = hardy::h_lambda({-2.0 / p, 0.0});
      const double predicted = stage("operator_norm", [&] {
        return operators::operator_norm(fam, p, t);
      });
      const double measured = stage("empirical_norm_ratio", [&] {
        return operators::empirical_norm_ratio(fam, probe, p, t);
      });
      row(format_real(p), measured, predicted);
    }
  } else if (axis == "n") {
    if (n_max < 1) throw ConfigError("sweep over n needs --k-max >= 1");
    const double p = p_values.empty() ? 2.0 : p_values.front();
    const auto info =
        stage("generator", [&] { return semigroup::generator(fam); });
    const auto gp = stage("nonuniform_growth_probe", [&] {
      return operators::nonuniform_growth_probe(info, p, n_max);
    });
    for (size_t i = 0; i < gp.n.size(); ++i)
      row(std::to_string(gp.n[i]), gp.gamma_norm[i], gp.floor_val[i]);
  } else if (axis == "nu") {
    const auto info =
        stage("generator", [&] { return semigroup::generator(fam); });
    if (info.dw.kind == semigroup::PointKind::Interior)
      throw ConfigError(
          "sweep over nu needs a boundary Denjoy-Wolff point (Abel model)");
    const auto model =
        stage("model_function", [&] { return semigroup::model_function(info); });
    const auto res_grid = semigroup::default_grid(8);
    for (int i = 0; i < grid.n_re; ++i) {
      const double re =
          grid.n_re == 1 ? grid.re_min
                         : grid.re_min + (grid.re_max - grid.re_min) * i /
                               (grid.n_re - 1);
      for (int j = 0; j < grid.n_im; ++j) {
        const double im =
            grid.n_im == 1 ? grid.im_min
                           : grid.im_min + (grid.im_max - grid.im_min) * j /
                                 (grid.n_im - 1);
        const std::complex<double> nu{re, im};
        const auto lambda = model.coefficient * nu;
        hardy::HardyFunction f;
        f.label = "exp(nu h)";
        auto h = model.h;
        auto hp = model.h_prime;
        f.eval = [h, nu](std::complex<double> z) {
          return std::exp(nu * h(z));
        };
        f.deriv = [h, hp, nu](std::complex<double> z) {
          return nu * hp(z) * std::exp(nu * h(z));
        };
        const auto er = stage("eigen_residual", [&] {
          return spectrum::eigen_residual(info, f, lambda, res_grid, {});
        });
        std::string label = format_real(re) + (im < 0 ? "" : "+") +
                            format_real(im) + "i";
        row(label, er.ode, 0.0);
      }
    }
  } else {
    throw ConfigError("unknown sweep axis: " + axis +
                      " (expected t, p, n, or nu)");
  }
  return csv;
}

}  // namespace hardylab::report
