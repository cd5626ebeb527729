#include "hardylab/spectrum.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "hardylab/errors.hpp"
#include "hardylab/operators.hpp"
#include "hardylab/parallel.hpp"

namespace hardylab::spectrum {

namespace {

void require_p(double p) {
  if (!(p > 0.0) || !std::isfinite(p))
    throw ParamError("point_spectrum: exponent p must be positive and "
                     "finite");
}

Complex pow_int(Complex base, int n) {
  Complex acc{1.0, 0.0};
  for (int k = 0; k < n; ++k) acc *= base;
  return acc;
}

// log-modulus samples along a low horizontal line; an eigenfunction whose
// boundary trace explodes cannot sit in any H^p.
bool grows_along_boundary(const std::function<double(Complex)>& log_mod) {
  double at_base = log_mod(Complex{0.0, 1.0});
  for (double x = 16.0; x <= 70000.0; x *= 4.0) {
    for (double s : {1.0, -1.0}) {
      if (log_mod(Complex{s * x, 0.5}) > 46.0 + std::max(0.0, at_base))
        return true;
    }
  }
  return false;
}

}  // namespace

NuGrid default_nu_grid() { return NuGrid{}; }

NuGrid parse_nu_grid(const std::string& text) {
  NuGrid grid;
  const auto comma = text.find(',');
  if (comma == std::string::npos)
    throw ParamError("nu-grid: expected 're0:re1:n,im0:im1:n', got '" + text +
                     "'");
  auto parse_axis = [&](const std::string& part, double& lo, double& hi,
                        int& n) {
    std::istringstream is(part);
    char c1 = 0, c2 = 0;
    if (!(is >> lo >> c1 >> hi >> c2 >> n) || c1 != ':' || c2 != ':' ||
        !is.eof())
      throw ParamError("nu-grid: bad axis '" + part + "'");
    if (n < 1) throw ParamError("nu-grid: need at least one point per axis");
    if (!(hi >= lo)) throw ParamError("nu-grid: axis bounds out of order");
  };
  parse_axis(text.substr(0, comma), grid.re_min, grid.re_max, grid.n_re);
  parse_axis(text.substr(comma + 1), grid.im_min, grid.im_max, grid.n_im);
  return grid;
}

std::vector<Complex> interior_candidates(Complex multiplier, int k_max) {
  if (k_max < 0) throw ParamError("interior_candidates: k_max must be >= 0");
  if (std::abs(multiplier) < 1e-10)
    throw DegenerateMultiplier("interior_candidates: multiplier is zero");
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(k_max) + 1);
  for (int k = 0; k <= k_max; ++k)
    out.push_back(static_cast<double>(k) * multiplier);
  return out;
}

EigenResidual eigen_residual(const semigroup::GeneratorInfo& info,
                             const hardy::HardyFunction& f, Complex lambda,
                             const std::vector<Complex>& grid,
                             const std::vector<double>& times) {
  if (grid.empty() || times.empty())
    throw ParamError("eigen_residual: empty grid or time list");
  if (!f.deriv)
    throw ParamError("eigen_residual: eigenfunction needs a derivative");
  std::vector<maps::AnalyticMap> phis;
  for (double t : times) phis.push_back(semigroup::member_at(info.fam, t));

  std::vector<double> ode(grid.size(), 0.0);
  std::vector<double> flow(grid.size() * times.size(), 0.0);
  auto ge = info.G.eval;
  par::for_index(static_cast<std::ptrdiff_t>(grid.size()),
                 [&](std::ptrdiff_t i) {
                   const std::size_t k = static_cast<std::size_t>(i);
                   const Complex z = grid[k];
                   ode[k] = std::abs(ge(z) * f.deriv(z) - lambda * f.eval(z));
                 });
  par::for_index(
      static_cast<std::ptrdiff_t>(flow.size()), [&](std::ptrdiff_t idx) {
        const std::size_t gi = idx / times.size();
        const std::size_t ti = idx % times.size();
        const Complex z = grid[gi];
        flow[static_cast<std::size_t>(idx)] =
            std::abs(f.eval(phis[ti].eval(z)) -
                     std::exp(lambda * times[ti]) * f.eval(z));
      });
  EigenResidual res;
  for (double v : ode) res.ode = std::max(res.ode, v);
  for (double v : flow) res.flow = std::max(res.flow, v);
  return res;
}

SpectrumReport point_spectrum(const semigroup::Family& fam, double p,
                              int k_max, const NuGrid& grid) {
  require_p(p);
  if (fam.trivial)
    throw ParamError("point_spectrum: trivial family has no dynamics");
  if (k_max < 0) throw ParamError("point_spectrum: k_max must be >= 0");

  const auto bounded = operators::classify_boundedness(fam, p);
  if (bounded.verdict != operators::Boundedness::Bounded)
    throw UnboundedOperator("point_spectrum: " + fam.name +
                            " is not certified bounded (" + bounded.note +
                            ")");

  const auto info = semigroup::generator(fam);
  semigroup::ModelFunction model;
  try {
    model = semigroup::model_function(info);
  } catch (const Error& e) {
    throw ModelUnavailable(std::string("point_spectrum: ") + e.what());
  }

  SpectrumReport rep;
  rep.family = fam.name;
  rep.p = p;
  rep.dw_kind = info.dw.kind;

  const auto res_grid = semigroup::default_grid(20);
  const std::vector<double> res_times{0.25, 1.0};

  auto finish = [&](Candidate& c, hardy::HardyFunction& f) {
    if (c.verdict == hardy::Membership::Member) {
      const auto res = eigen_residual(info, f, c.eigenvalue, res_grid,
                                      res_times);
      c.residual_checked = true;
      c.ode_residual = res.ode;
      c.flow_residual = res.flow;
      if (res.ode > 1e-6 || res.flow > 1e-6) {
        c.verdict = hardy::Membership::Inconclusive;
        c.note = "eigen-equation residual above tolerance";
      }
    }
    rep.candidates.push_back(c);
    if (c.verdict == hardy::Membership::Member)
      rep.sigma_pi.push_back(c.eigenvalue);
  };

  if (model.kind == semigroup::ModelKind::Koenigs) {
    std::ostringstream os;
    os << "k = 0.." << k_max << " with eigenvalue k G'(d)";
    rep.scan = os.str();
    const Complex m = model.coefficient;

    // When |h| stays bounded below far out, no positive power of h can decay
    // into the space, and the k = 0 constant never does.
    double low = std::numeric_limits<double>::infinity();
    for (double x = 16.0; x <= 70000.0; x *= 4.0)
      for (double s : {1.0, -1.0})
        low = std::min(low, std::abs(model.h(Complex{s * x, 1.0})));
    const bool shortcut = low >= 1e-3;

    for (int k = 0; k <= k_max; ++k) {
      Candidate c;
      c.eigenvalue = static_cast<double>(k) * m;
      c.eigenfunction = "h^" + std::to_string(k);
      auto h = model.h;
      auto hp = model.h_prime;
      hardy::HardyFunction f;
      f.label = c.eigenfunction;
      f.eval = [h, k](Complex z) { return pow_int(h(z), k); };
      f.deriv = [h, hp, k](Complex z) {
        return static_cast<double>(k) * pow_int(h(z), k - 1 < 0 ? 0 : k - 1) *
               hp(z);
      };
      if (shortcut) {
        c.verdict = hardy::Membership::NonMember;
        c.note = "intertwining coordinate bounded below toward infinity";
      } else {
        c.verdict = hardy::membership(f, p);
      }
      finish(c, f);
    }
    return rep;
  }

  std::ostringstream os;
  os << "nu in [" << grid.re_min << ", " << grid.re_max << "] x ["
     << grid.im_min << ", " << grid.im_max << "] (" << grid.n_re << " x "
     << grid.n_im << ") with eigenvalue nu G(i)";
  rep.scan = os.str();
  const Complex step = model.coefficient;
  for (int ir = 0; ir < grid.n_re; ++ir) {
    const double re =
        grid.n_re == 1
            ? grid.re_min
            : grid.re_min + (grid.re_max - grid.re_min) * ir / (grid.n_re - 1);
    for (int ii = 0; ii < grid.n_im; ++ii) {
      const double im = grid.n_im == 1 ? grid.im_min
                                       : grid.im_min + (grid.im_max -
                                                        grid.im_min) *
                                                           ii /
                                                           (grid.n_im - 1);
      const Complex nu{re, im};
      Candidate c;
      c.eigenvalue = nu * step;
      std::ostringstream fn;
      fn << "exp((" << re << (im < 0 ? "" : "+") << im << "i) h)";
      c.eigenfunction = fn.str();
      auto h = model.h;
      auto hp = model.h_prime;
      hardy::HardyFunction f;
      f.label = c.eigenfunction;
      f.eval = [h, nu](Complex z) { return std::exp(nu * h(z)); };
      f.deriv = [h, hp, nu](Complex z) {
        return nu * hp(z) * std::exp(nu * h(z));
      };
      auto log_mod = [h, nu](Complex z) { return (nu * h(z)).real(); };
      if (grows_along_boundary(log_mod)) {
        c.verdict = hardy::Membership::NonMember;
        c.note = "modulus explodes along the boundary";
        rep.candidates.push_back(c);
        continue;
      }
      c.verdict = hardy::membership(f, p);
      finish(c, f);
    }
  }
  return rep;
}

}  // namespace hardylab::spectrum
