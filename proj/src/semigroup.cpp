#include "hardylab/semigroup.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "hardylab/cayley.hpp"
#include "hardylab/errors.hpp"
#include "hardylab/extrapolate.hpp"
#include "hardylab/parallel.hpp"
#include "hardylab/quadrature.hpp"
#include "hardylab/sampling.hpp"

namespace hardylab::semigroup {

namespace {

const Complex kI{0.0, 1.0};

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

void check_family_params(const std::string& name,
                         const std::map<std::string, double>& params,
                         const std::vector<std::string>& required) {
  for (const auto& key : required)
    if (!params.count(key))
      throw ParamError(name + ": missing parameter '" + key + "'");
  for (const auto& [key, value] : params) {
    (void)value;
    if (std::find(required.begin(), required.end(), key) == required.end())
      throw ParamError(name + ": unknown parameter '" + key + "'");
  }
}

}  // namespace

ExtendedPoint interior_point(Complex z) {
  if (!(z.imag() > 0.0))
    throw ParamError("interior_point: needs positive imaginary part");
  return ExtendedPoint{PointKind::Interior, z};
}

ExtendedPoint boundary_point(double x) {
  return ExtendedPoint{PointKind::BoundaryReal, Complex{x, 0.0}};
}

ExtendedPoint infinity_point() {
  return ExtendedPoint{PointKind::Infinity, Complex{0.0, 0.0}};
}

double chordal(Complex a, Complex b) {
  return 2.0 * std::abs(a - b) /
         (std::sqrt(1.0 + std::norm(a)) * std::sqrt(1.0 + std::norm(b)));
}

double chordal_to_infinity(Complex a) {
  return 2.0 / std::sqrt(1.0 + std::norm(a));
}

double extended_distance(const ExtendedPoint& a, const ExtendedPoint& b) {
  const bool ainf = a.kind == PointKind::Infinity;
  const bool binf = b.kind == PointKind::Infinity;
  if (ainf && binf) return 0.0;
  if (ainf) return chordal_to_infinity(b.value);
  if (binf) return chordal_to_infinity(a.value);
  return chordal(a.value, b.value);
}

std::string describe(const ExtendedPoint& p) {
  switch (p.kind) {
    case PointKind::Infinity:
      return "infinity";
    case PointKind::BoundaryReal: {
      std::ostringstream os;
      os << "boundary " << p.value.real();
      return os.str();
    }
    case PointKind::Interior: {
      std::ostringstream os;
      os << "interior (" << p.value.real() << ", " << p.value.imag() << ")";
      return os.str();
    }
  }
  return "?";
}

Family family_lookup(const std::string& name,
                     const std::map<std::string, double>& params) {
  Family fam;
  fam.name = name;
  fam.params = params;
  if (name == "trivial") {
    check_family_params(name, params, {});
    fam.trivial = true;
    fam.at = [](double) { return maps::identity(); };
    fam.generator_eval = [](Complex) { return Complex{0.0, 0.0}; };
    fam.generator_deriv = [](Complex) { return Complex{0.0, 0.0}; };
    fam.phi1_inf_closed = 1.0;
    return fam;
  }
  if (name == "dilation") {
    check_family_params(name, params, {"c"});
    const double c = params.at("c");
    if (c == 0.0 || !std::isfinite(c))
      throw ParamError("dilation family: rate c must be finite and nonzero");
    fam.at = [c](double t) { return maps::dilation(std::exp(c * t)); };
    fam.generator_eval = [c](Complex z) { return c * z; };
    fam.generator_deriv = [c](Complex) { return Complex{c, 0.0}; };
    fam.dw_closed = c > 0.0 ? infinity_point() : boundary_point(0.0);
    fam.phi1_inf_closed = std::exp(c);
    return fam;
  }
  if (name == "translation") {
    check_family_params(name, params, {"b"});
    const double b = params.at("b");
    if (b == 0.0 || !std::isfinite(b))
      throw ParamError("translation family: offset b must be finite and "
                       "nonzero");
    fam.at = [b](double t) { return maps::translation(b * t); };
    fam.generator_eval = [b](Complex) { return Complex{b, 0.0}; };
    fam.generator_deriv = [](Complex) { return Complex{0.0, 0.0}; };
    fam.dw_closed = infinity_point();
    fam.phi1_inf_closed = 1.0;
    return fam;
  }
  if (name == "mobius_elliptic" || name == "example1") {
    double c = 1.0;
    if (name == "mobius_elliptic") {
      check_family_params(name, params, {"c"});
      c = params.at("c");
      if (!(c > 0.0)) throw ParamError("mobius_elliptic: rate c must be "
                                       "positive");
    } else {
      check_family_params(name, params, {});
    }
    fam.at = [c](double t) { return maps::example1_map(c * t); };
    fam.generator_eval = [c](Complex z) {
      return c * kI * (z * z + 1.0) / 2.0;
    };
    fam.generator_deriv = [c](Complex z) { return c * kI * z; };
    fam.dw_closed = interior_point(kI);
    fam.phi1_inf_closed = 0.0;
    return fam;
  }
  if (name == "example2") {
    check_family_params(name, params, {});
    fam.at = [](double t) { return maps::example2_map(t); };
    fam.generator_eval = [](Complex z) {
      return -(z + 1.0) * std::log(z + 1.0);
    };
    fam.generator_deriv = [](Complex z) { return -std::log(z + 1.0) - 1.0; };
    fam.dw_closed = boundary_point(0.0);
    fam.phi1_inf_closed = 0.0;
    return fam;
  }
  if (name == "sqrt_parabolic") {
    check_family_params(name, params, {});
    fam.at = [](double t) { return maps::sqrt_parabolic_map(t); };
    fam.generator_eval = [](Complex z) { return -1.0 / (2.0 * z); };
    fam.generator_deriv = [](Complex z) { return 1.0 / (2.0 * z * z); };
    fam.dw_closed = infinity_point();
    fam.phi1_inf_closed = 1.0;
    return fam;
  }
  throw UnknownFamily("family_lookup: no family named '" + name + "'");
}

maps::AnalyticMap member_at(const Family& fam, double t) {
  if (!(t >= 0.0) || !std::isfinite(t))
    throw ParamError(fam.name + ": time must be nonnegative and finite");
  return fam.at(t);
}

std::vector<Complex> default_grid(int n) {
  if (n < 1) throw ParamError("default_grid: need at least one point");
  const int cols = static_cast<int>(std::ceil(std::sqrt(double(n))));
  const int rows = (n + cols - 1) / cols;
  std::vector<Complex> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < rows && static_cast<int>(pts.size()) < n; ++i)
    for (int j = 0; j < cols && static_cast<int>(pts.size()) < n; ++j) {
      const double x = -4.5 + 9.0 * (j + 0.5) / cols;
      const double y = 0.25 + 2.25 * (i + 0.5) / rows;
      pts.emplace_back(x, y);
    }
  return pts;
}

double semigroup_law_residual(const Family& fam,
                              const std::vector<Complex>& grid,
                              const std::vector<std::pair<double, double>>&
                                  times) {
  if (grid.empty() || times.empty())
    throw ParamError("semigroup_law_residual: empty grid or time list");
  std::vector<double> res(grid.size() * times.size(), 0.0);
  std::vector<maps::AnalyticMap> m_t, m_s, m_ts;
  for (const auto& [t, s] : times) {
    m_t.push_back(member_at(fam, t));
    m_s.push_back(member_at(fam, s));
    m_ts.push_back(member_at(fam, t + s));
  }
  par::for_index(static_cast<std::ptrdiff_t>(res.size()),
                 [&](std::ptrdiff_t idx) {
                   const std::size_t gi = idx / times.size();
                   const std::size_t ti = idx % times.size();
                   const Complex z = grid[gi];
                   const Complex lhs = m_ts[ti].eval(z);
                   const Complex rhs = m_t[ti].eval(m_s[ti].eval(z));
                   res[static_cast<std::size_t>(idx)] = std::abs(lhs - rhs);
                 });
  double worst = 0.0;
  for (double r : res) worst = std::max(worst, r);
  return worst;
}

double identity_residual(const Family& fam, const std::vector<Complex>& grid) {
  if (grid.empty()) throw ParamError("identity_residual: empty grid");
  const auto phi0 = member_at(fam, 0.0);
  std::vector<double> res(grid.size(), 0.0);
  par::for_index(static_cast<std::ptrdiff_t>(grid.size()),
                 [&](std::ptrdiff_t i) {
                   const std::size_t k = static_cast<std::size_t>(i);
                   res[k] = std::abs(phi0.eval(grid[k]) - grid[k]);
                 });
  double worst = 0.0;
  for (double r : res) worst = std::max(worst, r);
  return worst;
}

namespace {

const std::vector<double> kGenTimes{1e-2, 1e-3, 1e-4};

Complex generator_limit(const Family& fam, Complex z, bool check) {
  std::vector<Complex> diffs;
  diffs.reserve(kGenTimes.size());
  for (double t : kGenTimes) {
    const auto phi = fam.at(t);
    diffs.push_back((phi.eval(z) - z) / t);
  }
  const Complex n3 = extrapolate::neville_at_zero(kGenTimes, diffs);
  if (check) {
    const Complex n2 = extrapolate::neville_at_zero(
        std::vector<double>{kGenTimes[1], kGenTimes[2]},
        std::vector<Complex>{diffs[1], diffs[2]});
    if (std::abs(n3 - n2) > 1e-4 * std::max(1.0, std::abs(n3)))
      throw ConvergenceError(
          fam.name +
          ": generator extrapolation levels disagree at z = (" +
          fmt(z.real()) + ", " + fmt(z.imag()) + ")");
  }
  return n3;
}

}  // namespace

Complex generator_numeric_at(const Family& fam, Complex z) {
  if (fam.trivial)
    throw ParamError("generator: trivial family has no dynamics");
  maps::require_in_domain(maps::Domain::HalfPlane, z, "generator");
  return generator_limit(fam, z, true);
}

ExtendedPoint dw_point(const Family& fam) {
  if (fam.trivial)
    throw ParamError("dw_point: trivial family has no dynamics");
  const auto phi1 = fam.at(1.0);
  const Complex z0{1.0, 2.0};  // generic start, off any rotation centre
  Complex z = z0;
  constexpr int kMaxIter = 1000;
  constexpr double kDispTol = 1e-8;
  std::vector<double> disp;
  std::vector<double> chi_inf;
  disp.reserve(kMaxIter);
  chi_inf.reserve(kMaxIter);

  ExtendedPoint result;
  bool classified = false;
  for (int n = 0; n < kMaxIter; ++n) {
    const Complex zn = phi1.eval(z);
    if (!std::isfinite(zn.real()) || !std::isfinite(zn.imag()))
      throw NoConvergence(fam.name + ": iterate became non-finite");
    disp.push_back(chordal(zn, z));
    chi_inf.push_back(chordal_to_infinity(zn));
    z = zn;
    if (disp.back() < kDispTol) {
      if (chordal_to_infinity(z) < 1e-6) {
        result = infinity_point();
      } else if (std::abs(z.imag()) < 1e-6) {
        result = boundary_point(z.real());
      } else {
        result = interior_point(z);
      }
      classified = true;
      break;
    }
  }

  if (!classified) {
    // Escape analysis: a contracting displacement with the chordal gap to
    // infinity also contracting marks divergence to infinity (parabolic or
    // slow hyperbolic escape that cannot meet the displacement tolerance in
    // the iteration budget).
    const std::size_t n = disp.size();
    const double s_end = disp[n - 1];
    const double s_mid = disp[n / 2];
    const double s_quarter = disp[n / 4];
    const bool contracting = s_end < 0.9 * s_mid && s_mid < 0.9 * s_quarter;
    const double c_end = chi_inf[n - 1];
    const double c_mid = chi_inf[n / 2];
    if (contracting && c_end < 0.5 && c_end < 0.95 * c_mid) {
      result = infinity_point();
    } else {
      throw NoConvergence(
          fam.name +
          ": iteration neither converged nor showed a monotone escape after "
          "1000 steps (final displacement " +
          fmt(s_end) + ")");
    }
  }

  if (fam.dw_closed) {
    const double gap = extended_distance(result, *fam.dw_closed);
    if (gap > 1e-6)
      throw NoConvergence(fam.name +
                          ": iteration limit disagrees with the attached "
                          "fixed point (gap " +
                          fmt(gap) + ")");
  }
  return result;
}

GeneratorInfo generator(const Family& fam) {
  if (fam.trivial)
    throw ParamError("generator: trivial family has no dynamics");
  GeneratorInfo info;
  info.fam = fam;

  const auto check_grid = default_grid(24);
  if (fam.generator_eval) {
    info.closed_form = true;
    std::vector<double> gaps(check_grid.size(), 0.0);
    par::for_index(static_cast<std::ptrdiff_t>(check_grid.size()),
                   [&](std::ptrdiff_t i) {
                     const std::size_t k = static_cast<std::size_t>(i);
                     const Complex z = check_grid[k];
                     gaps[k] = std::abs(generator_limit(fam, z, true) -
                                        fam.generator_eval(z));
                   });
    double worst = 0.0;
    for (std::size_t k = 0; k < gaps.size(); ++k) {
      worst = std::max(worst, gaps[k]);
      const double scale =
          1.0 + std::abs(fam.generator_eval(check_grid[k]));
      if (gaps[k] > 1e-6 * scale)
        throw ConvergenceError(
            fam.name + ": numeric generator misses the closed form by " +
            fmt(gaps[k]) + " at (" + fmt(check_grid[k].real()) + ", " +
            fmt(check_grid[k].imag()) + ")");
    }
    info.cross_check = worst;
  }

  info.G.name = "G[" + fam.name + "]";
  info.G.domain = maps::Domain::HalfPlane;
  info.G.self_map = false;
  if (fam.generator_eval) {
    info.G.eval = fam.generator_eval;
    if (fam.generator_deriv) info.G.deriv = fam.generator_deriv;
  } else {
    Family captured = fam;
    info.G.eval = [captured](Complex z) {
      return generator_limit(captured, z, false);
    };
  }

  // Flow identity at an interior time: G(phi_t(z)) = d/dt phi_t(z).
  {
    const double t0 = 0.5;
    const auto flow_grid = default_grid(12);
    const double h = 1e-3;
    const auto p_ph = fam.at(t0 + h), p_mh = fam.at(t0 - h);
    const auto p_ph2 = fam.at(t0 + h / 2), p_mh2 = fam.at(t0 - h / 2);
    const auto p_mid = fam.at(t0);
    std::vector<double> res(flow_grid.size(), 0.0);
    par::for_index(
        static_cast<std::ptrdiff_t>(flow_grid.size()), [&](std::ptrdiff_t i) {
          const std::size_t k = static_cast<std::size_t>(i);
          const Complex z = flow_grid[k];
          const Complex d1 = (p_ph.eval(z) - p_mh.eval(z)) / (2.0 * h);
          const Complex d2 = (p_ph2.eval(z) - p_mh2.eval(z)) / h;
          const Complex ddt = (4.0 * d2 - d1) / 3.0;
          res[k] = std::abs(info.G.eval(p_mid.eval(z)) - ddt);
        });
    double worst = 0.0;
    for (std::size_t k = 0; k < res.size(); ++k) {
      const double scale =
          1.0 + std::abs(info.G.eval(p_mid.eval(flow_grid[k])));
      if (res[k] > 1e-5 * scale)
        throw ConvergenceError(fam.name +
                               ": flow identity residual " + fmt(res[k]) +
                               " at t = 0.5");
      worst = std::max(worst, res[k]);
    }
    info.flow_residual = worst;
  }

  info.dw = dw_point(fam);
  return info;
}

std::function<Complex(Complex)> berkson_porta_F(const GeneratorInfo& info) {
  if (info.dw.kind != PointKind::Interior)
    throw NotApplicable(
        "berkson_porta_F: needs an interior Denjoy-Wolff point");
  const Complex d = info.dw.value;
  const Complex m = maps::derivative_at(info.G, d);
  const Complex at_d = m / (d - std::conj(d));
  auto geval = info.G.eval;
  const double scale = 1.0 + std::abs(d);
  return [geval, d, m, at_d, scale](Complex z) {
    if (std::abs(z - d) < 1e-6 * scale) return at_d;
    return geval(z) / ((z - std::conj(d)) * (z - d));
  };
}

double sign_condition_min(const GeneratorInfo& info,
                          const std::vector<Complex>& grid) {
  if (grid.empty()) throw ParamError("sign_condition_min: empty grid");
  std::function<Complex(Complex)> f;
  if (info.dw.kind == PointKind::Interior) {
    f = berkson_porta_F(info);
  } else if (info.dw.kind == PointKind::Infinity) {
    f = info.G.eval;
  } else {
    throw NotApplicable(
        "sign_condition_min: no pinned sign form for a finite boundary "
        "Denjoy-Wolff point");
  }
  std::vector<double> ims(grid.size(), 0.0);
  par::for_index(static_cast<std::ptrdiff_t>(grid.size()),
                 [&](std::ptrdiff_t i) {
                   const std::size_t k = static_cast<std::size_t>(i);
                   ims[k] = f(grid[k]).imag();
                 });
  double lo = ims[0];
  for (double v : ims) lo = std::min(lo, v);
  return lo;
}

AngularDerivative angular_derivative_detail(const maps::AnalyticMap& phi) {
  constexpr int kPts = 25;
  const auto ray1 = cayley::nt_ray(0.0, kPts);
  const auto ray2 = cayley::nt_ray(0.5, kPts);
  std::vector<double> v1(kPts), v2(kPts);
  par::for_index(kPts, [&](std::ptrdiff_t i) {
    const std::size_t k = static_cast<std::size_t>(i);
    v1[k] = std::abs(phi.eval(ray1[k]) / ray1[k]);
    v2[k] = std::abs(phi.eval(ray2[k]) / ray2[k]);
  });
  AngularDerivative out;
  out.value = v1.back();
  out.second_ray = v2.back();
  out.decreasing = v1[kPts - 1] < 0.95 * v1[kPts / 2];

  auto eng = sampling::engine(11);
  const auto pts = sampling::halfplane_points(1000, eng);
  std::vector<double> q(pts.size(), 0.0);
  par::for_index(static_cast<std::ptrdiff_t>(pts.size()),
                 [&](std::ptrdiff_t i) {
                   const std::size_t k = static_cast<std::size_t>(i);
                   q[k] = phi.eval(pts[k]).imag() / pts[k].imag();
                 });
  double lo = q[0];
  for (double v : q) lo = std::min(lo, v);
  out.inf_sample = lo;
  return out;
}

double angular_derivative_at_infinity(const maps::AnalyticMap& phi) {
  const auto d = angular_derivative_detail(phi);
  if (std::abs(d.value - d.second_ray) >
      1e-3 * std::max({1.0, d.value, d.second_ray}))
    throw RayDisagreement(phi.name +
                          ": ray estimates of the angular derivative "
                          "disagree (" +
                          fmt(d.value) + " vs " + fmt(d.second_ray) + ")");
  if (d.inf_sample < d.value - 1e-3 * std::max(1.0, d.value))
    throw InfimumMismatch(phi.name +
                          ": sampled infimum of Im phi / Im undercuts the "
                          "ray limit (" +
                          fmt(d.inf_sample) + " vs " + fmt(d.value) + ")");
  return d.value;
}

double delta_limit(GeneratorInfo& info) {
  constexpr int kPts = 25;
  const auto ray = cayley::nt_ray(0.0, kPts);
  std::vector<Complex> a(kPts), b(kPts);
  par::for_index(kPts, [&](std::ptrdiff_t i) {
    const std::size_t k = static_cast<std::size_t>(i);
    a[k] = info.G.eval(ray[k]) / ray[k];
    b[k] = maps::derivative_at(info.G, ray[k]);
  });
  auto diverging = [&](const std::vector<Complex>& s) {
    const double far = std::abs(s[kPts - 1]);
    return far > 0.5 && far > 1.05 * std::abs(s[kPts - 5]) &&
           far > 2.0 * std::abs(s[0]);
  };
  if (diverging(a))
    throw DivergenceDetected(info.fam.name +
                             ": G(z)/z grows along the vertical ray");
  if (diverging(b))
    throw DivergenceDetected(info.fam.name +
                             ": G'(z) grows along the vertical ray");
  const Complex A = a.back(), B = b.back();
  if (std::abs(A - B) > 1e-3 * std::max({1.0, std::abs(A), std::abs(B)}))
    throw ConvergenceError(info.fam.name +
                           ": the two rate estimates disagree (" +
                           fmt(std::abs(A - B)) + ")");
  if (std::abs(A.imag()) > 1e-3 * std::max(1.0, std::abs(A)))
    throw ConvergenceError(info.fam.name +
                           ": rate estimate kept an imaginary part");
  info.delta = A.real();
  return A.real();
}

double conjugate_generator_residual(const GeneratorInfo& info,
                                    const std::vector<Complex>& grid) {
  if (grid.empty())
    throw ParamError("conjugate_generator_residual: empty grid");
  std::vector<maps::AnalyticMap> conj_maps;
  for (double t : kGenTimes)
    conj_maps.push_back(cayley::conjugate_map(info.fam.at(t)));
  std::vector<double> res(grid.size(), 0.0);
  par::for_index(
      static_cast<std::ptrdiff_t>(grid.size()), [&](std::ptrdiff_t i) {
        const std::size_t k = static_cast<std::size_t>(i);
        const Complex z = grid[k];
        const Complex w = cayley::to_disc(z);
        std::vector<Complex> diffs;
        diffs.reserve(kGenTimes.size());
        for (std::size_t j = 0; j < kGenTimes.size(); ++j)
          diffs.push_back((conj_maps[j].eval(w) - w) / kGenTimes[j]);
        const Complex gtilde =
            extrapolate::neville_at_zero(kGenTimes, diffs);
        const Complex rhs = cayley::to_disc_deriv(z) * info.G.eval(z);
        res[k] = std::abs(gtilde - rhs);
      });
  double worst = 0.0;
  for (double r : res) worst = std::max(worst, r);
  return worst;
}

ModelFunction model_function(const GeneratorInfo& info) {
  ModelFunction model;
  auto geval = info.G.eval;
  if (info.dw.kind == PointKind::Interior) {
    // The coordinate must vanish exactly where G does; the flow-iterated
    // fixed point carries ~1e-9 of error that the singularity patch would
    // amplify, so polish it against G before building anything.
    Complex d = info.dw.value;
    double best = std::abs(geval(d));
    for (int it = 0; it < 6 && best > 0.0; ++it) {
      const Complex slope = maps::derivative_at(info.G, d);
      if (!(std::abs(slope) > 1e-14)) break;
      const Complex cand = d - geval(d) / slope;
      if (!std::isfinite(cand.real()) || !std::isfinite(cand.imag()) ||
          !(cand.imag() > 0.0))
        break;
      const double v = std::abs(geval(cand));
      if (v >= best) break;
      d = cand;
      best = v;
    }
    const Complex m = maps::derivative_at(info.G, d);
    if (std::abs(m) < 1e-10)
      throw DegenerateMultiplier(info.fam.name +
                                 ": generator derivative vanishes at the "
                                 "fixed point");
    // Second-order data patches the removable singularity of the Koenigs
    // integrand at d.
    maps::AnalyticMap gp;
    gp.name = info.G.name + "'";
    gp.domain = maps::Domain::HalfPlane;
    if (info.G.deriv) {
      gp.eval = info.G.deriv;
    } else {
      auto g = info.G;
      gp.eval = [g](Complex z) { return maps::derivative_at(g, z); };
    }
    const Complex g2 = maps::derivative_at(gp, d);
    const Complex j_at_d = -g2 / (2.0 * m);
    maps::AnalyticMap gpp;
    gpp.name = gp.name + "'";
    gpp.domain = maps::Domain::HalfPlane;
    {
      auto gp_copy = gp;
      gpp.eval = [gp_copy](Complex z) {
        return maps::derivative_at(gp_copy, z);
      };
    }
    const Complex g3 = maps::derivative_at(gpp, d);
    const Complex j_slope = j_at_d * j_at_d - g3 / (6.0 * m);
    const double scale = 1.0 + std::abs(d);

    // Evaluating G near its zero loses a relative 1e-16/|zeta - d|, so the
    // subtracted form m/G - 1/(zeta - d) is noise of order 1e-16/|zeta - d|^2
    // there; inside that radius the two-term Taylor patch is far more
    // accurate than the direct formula.
    const double patch_r = 3e-4 * scale;
    auto integrand = [geval, d, m, j_at_d, j_slope, patch_r,
                      scale](Complex zeta) {
      if (std::abs(zeta - d) < patch_r) return j_at_d + j_slope * (zeta - d);
      const Complex g = geval(zeta);
      if (std::abs(g) < 1e-9 && std::abs(zeta - d) > 1e-3 * scale)
        throw PathThroughZero(
            "model_function: generator vanishes on the integration path "
            "away from the fixed point");
      return m / g - 1.0 / (zeta - d);
    };
    auto h = [integrand, d](Complex z) {
      return (z - d) *
             std::exp(quadrature::segment_integral(integrand, d, z));
    };
    auto h_prime = [h, geval, d, m, scale](Complex z) {
      if (std::abs(z - d) < 1e-8 * scale) return Complex{1.0, 0.0};
      return m * h(z) / geval(z);
    };
    model.kind = ModelKind::Koenigs;
    model.coefficient = m;
    model.base = d;
    model.h = h;
    model.h_prime = h_prime;
    return model;
  }

  const Complex base = kI;
  const Complex step = geval(base);
  if (std::abs(step) < 1e-12)
    throw DegenerateMultiplier(info.fam.name +
                               ": generator vanishes at the base point");
  auto integrand = [geval, step](Complex zeta) {
    const Complex g = geval(zeta);
    if (std::abs(g) < 1e-12 * std::max(1.0, std::abs(step)))
      throw PathThroughZero(
          "model_function: generator vanishes on the integration path");
    return step / g;
  };
  auto h = [integrand, base](Complex z) {
    return quadrature::segment_integral(integrand, base, z);
  };
  auto h_prime = [geval, step](Complex z) { return step / geval(z); };
  model.kind = ModelKind::Abel;
  model.coefficient = step;
  model.base = base;
  model.h = h;
  model.h_prime = h_prime;
  return model;
}

double model_equation_residual(const Family& fam, const ModelFunction& model,
                               const std::vector<Complex>& grid,
                               const std::vector<double>& times) {
  if (grid.empty() || times.empty())
    throw ParamError("model_equation_residual: empty grid or time list");
  std::vector<maps::AnalyticMap> phis;
  for (double t : times) phis.push_back(member_at(fam, t));
  std::vector<double> res(grid.size() * times.size(), 0.0);
  par::for_index(
      static_cast<std::ptrdiff_t>(res.size()), [&](std::ptrdiff_t idx) {
        const std::size_t gi = idx / times.size();
        const std::size_t ti = idx % times.size();
        const Complex z = grid[gi];
        const double t = times[ti];
        const Complex lhs = model.h(phis[ti].eval(z));
        Complex rhs;
        if (model.kind == ModelKind::Koenigs) {
          rhs = std::exp(model.coefficient * t) * model.h(z);
        } else {
          rhs = model.h(z) + model.coefficient * t;
        }
        res[static_cast<std::size_t>(idx)] = std::abs(lhs - rhs);
      });
  double worst = 0.0;
  for (double r : res) worst = std::max(worst, r);
  return worst;
}

}  // namespace hardylab::semigroup
