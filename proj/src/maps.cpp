#include "hardylab/maps.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include "hardylab/errors.hpp"

namespace hardylab::maps {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

const Complex kI{0.0, 1.0};

}  // namespace

bool in_domain(Domain d, Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return d == Domain::HalfPlane ? z.imag() > 0.0 : std::abs(z) < 1.0;
}

void require_in_domain(Domain d, Complex z, const std::string& who) {
  if (!in_domain(d, z)) {
    std::ostringstream os;
    os << who << ": point (" << z.real() << ", " << z.imag() << ") is outside "
       << (d == Domain::HalfPlane ? "the upper half-plane" : "the unit disc");
    throw DomainError(os.str());
  }
}

Complex eval_map(const AnalyticMap& m, Complex z) {
  require_in_domain(m.domain, z, m.name);
  return m.eval(z);
}

Complex derivative_at(const AnalyticMap& m, Complex z) {
  require_in_domain(m.domain, z, m.name + ".derivative");
  if (m.deriv) return m.deriv(z);
  const double dist =
      m.domain == Domain::HalfPlane ? z.imag() : 1.0 - std::abs(z);
  const double r = 0.5 * std::min(dist, 1.0);
  auto ring = [&](int n) {
    Complex acc{0.0, 0.0};
    for (int k = 0; k < n; ++k) {
      const double th = 2.0 * std::numbers::pi * k / n;
      const Complex u = std::polar(1.0, th);
      acc += m.eval(z + r * u) * std::conj(u);
    }
    return acc / (static_cast<double>(n) * r);
  };
  const Complex d64 = ring(64);
  const Complex d128 = ring(128);
  if (std::abs(d64 - d128) > 1e-8 * std::max(1.0, std::abs(d128)))
    throw ConvergenceError(m.name +
                           ".derivative: circle rule did not settle when "
                           "doubling from 64 to 128 nodes");
  return d128;
}

Complex sqrt_upper(Complex w) {
  Complex s = std::sqrt(w);
  if (s.imag() < 0.0) s = -s;
  return s;
}

AnalyticMap identity() {
  AnalyticMap m;
  m.name = "identity";
  m.self_map = true;
  m.eval = [](Complex z) { return z; };
  m.deriv = [](Complex) { return Complex{1.0, 0.0}; };
  return m;
}

AnalyticMap dilation(double c) {
  if (!(c > 0.0))
    throw ParamError("dilation: factor must be positive, got " + fmt(c));
  AnalyticMap m;
  m.name = "dilation(" + fmt(c) + ")";
  m.self_map = true;
  m.eval = [c](Complex z) { return c * z; };
  m.deriv = [c](Complex) { return Complex{c, 0.0}; };
  return m;
}

AnalyticMap translation(double b) {
  if (!std::isfinite(b)) throw ParamError("translation: offset must be finite");
  AnalyticMap m;
  m.name = "translation(" + fmt(b) + ")";
  m.self_map = true;
  m.eval = [b](Complex z) { return z + b; };
  m.deriv = [](Complex) { return Complex{1.0, 0.0}; };
  return m;
}

AnalyticMap mobius(double a, double b, double c, double d) {
  const double det = a * d - b * c;
  if (!(det > 0.0))
    throw ParamError("mobius: ad - bc must be positive, got " + fmt(det));
  AnalyticMap m;
  std::ostringstream os;
  os << "mobius(" << a << "," << b << "," << c << "," << d << ")";
  m.name = os.str();
  m.self_map = true;
  m.eval = [a, b, c, d](Complex z) { return (a * z + b) / (c * z + d); };
  m.deriv = [c, d, det](Complex z) {
    const Complex den = c * z + d;
    return det / (den * den);
  };
  return m;
}

AnalyticMap example1_map(double t) {
  if (!(t >= 0.0)) throw ParamError("example1: time must be nonnegative");
  // Moebius form of the elliptic flow fixing i, with multiplier e^{-t}.
  const double mfac = std::exp(-t);
  const Complex A = kI * (1.0 + mfac);
  const Complex B{-(1.0 - mfac), 0.0};
  const Complex C{1.0 - mfac, 0.0};
  const Complex D = kI * (1.0 + mfac);
  const double det = -4.0 * mfac;  // AD - BC, real here
  AnalyticMap m;
  m.name = "example1(" + fmt(t) + ")";
  m.self_map = true;
  m.eval = [A, B, C, D](Complex z) { return (A * z + B) / (C * z + D); };
  m.deriv = [C, D, det](Complex z) {
    const Complex den = C * z + D;
    return det / (den * den);
  };
  return m;
}

AnalyticMap example2_map(double t) {
  if (!(t >= 0.0)) throw ParamError("example2: time must be nonnegative");
  const double a = std::exp(-t);
  AnalyticMap m;
  m.name = "example2(" + fmt(t) + ")";
  m.self_map = true;
  // (z+1)^a - 1 in the principal branch; z+1 has positive imaginary part so
  // its argument lies in (0, pi) and the image argument in (0, a pi).
  m.eval = [a](Complex z) { return std::exp(a * std::log(z + 1.0)) - 1.0; };
  m.deriv = [a](Complex z) {
    return a * std::exp((a - 1.0) * std::log(z + 1.0));
  };
  return m;
}

AnalyticMap sqrt_parabolic_map(double t) {
  if (!(t >= 0.0)) throw ParamError("sqrt_parabolic: time must be nonnegative");
  AnalyticMap m;
  m.name = "sqrt_parabolic(" + fmt(t) + ")";
  m.self_map = true;
  // z^2 - t avoids [0, inf) for z in the upper half-plane, so the upper
  // square root is the holomorphic continuation of the identity at t = 0.
  m.eval = [t](Complex z) { return sqrt_upper(z * z - t); };
  m.deriv = [t](Complex z) { return z / sqrt_upper(z * z - t); };
  return m;
}

namespace {

void check_params(const std::string& name,
                  const std::map<std::string, double>& params,
                  const std::set<std::string>& required) {
  for (const auto& key : required)
    if (!params.count(key))
      throw ParamError(name + ": missing parameter '" + key + "'");
  for (const auto& [key, value] : params) {
    (void)value;
    if (!required.count(key))
      throw ParamError(name + ": unknown parameter '" + key + "'");
  }
}

}  // namespace

AnalyticMap catalog(const std::string& name,
                    const std::map<std::string, double>& params) {
  if (name == "identity") {
    check_params(name, params, {});
    return identity();
  }
  if (name == "dilation") {
    check_params(name, params, {"c"});
    return dilation(params.at("c"));
  }
  if (name == "translation") {
    check_params(name, params, {"b"});
    return translation(params.at("b"));
  }
  if (name == "mobius") {
    check_params(name, params, {"a", "b", "c", "d"});
    return mobius(params.at("a"), params.at("b"), params.at("c"),
                  params.at("d"));
  }
  if (name == "example1") {
    check_params(name, params, {"t"});
    return example1_map(params.at("t"));
  }
  if (name == "example2") {
    check_params(name, params, {"t"});
    return example2_map(params.at("t"));
  }
  if (name == "sqrt_parabolic") {
    check_params(name, params, {"t"});
    return sqrt_parabolic_map(params.at("t"));
  }
  throw UnknownCatalogEntry("catalog: no entry named '" + name + "'");
}

AnalyticMap compose(const AnalyticMap& outer, const AnalyticMap& inner) {
  if (outer.domain != (inner.self_map ? inner.domain : outer.domain))
    throw ParamError("compose: domains do not chain");
  AnalyticMap m;
  m.name = outer.name + "*" + inner.name;
  m.domain = inner.domain;
  m.self_map = outer.self_map && inner.self_map;
  auto oe = outer.eval;
  auto ie = inner.eval;
  m.eval = [oe, ie](Complex z) { return oe(ie(z)); };
  if (outer.deriv && inner.deriv) {
    auto od = outer.deriv;
    auto idr = inner.deriv;
    m.deriv = [od, idr, ie](Complex z) { return od(ie(z)) * idr(z); };
  }
  return m;
}

}  // namespace hardylab::maps
