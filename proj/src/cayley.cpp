#include "hardylab/cayley.hpp"

#include <cmath>

#include "hardylab/errors.hpp"

namespace hardylab::cayley {

namespace {
const Complex kI{0.0, 1.0};
}

Complex to_halfplane(Complex w) {
  maps::require_in_domain(maps::Domain::Disc, w, "to_halfplane");
  return kI * (1.0 + w) / (1.0 - w);
}

Complex to_disc(Complex z) {
  maps::require_in_domain(maps::Domain::HalfPlane, z, "to_disc");
  return (z - kI) / (z + kI);
}

Complex to_halfplane_deriv(Complex w) {
  const Complex d = 1.0 - w;
  return 2.0 * kI / (d * d);
}

Complex to_disc_deriv(Complex z) {
  const Complex d = z + kI;
  return 2.0 * kI / (d * d);
}

Sector sector_at_infinity(double opening) {
  if (!(opening > 0.0))
    throw ParamError("sector_at_infinity: opening must be positive");
  return Sector{SectorKind::HalfPlaneAtInfinity, opening};
}

Sector sector_at_one(double opening) {
  if (!(opening > 1.0))
    throw ParamError("sector_at_one: opening must exceed 1");
  return Sector{SectorKind::DiscAtOne, opening};
}

bool sector_contains(const Sector& s, Complex z) {
  if (s.kind == SectorKind::HalfPlaneAtInfinity) {
    return z.imag() > 0.0 && std::abs(z.real()) < s.opening * z.imag();
  }
  const double r = std::abs(z);
  return r < 1.0 && std::abs(z - 1.0) < s.opening * (1.0 - r);
}

namespace {

std::vector<double> radii_schedule(int n) {
  std::vector<double> r(static_cast<std::size_t>(n));
  if (n == 1) {
    r[0] = 10.0;
    return r;
  }
  const double lo = std::log(10.0), hi = std::log(1e6);
  for (int k = 0; k < n; ++k)
    r[static_cast<std::size_t>(k)] =
        std::exp(lo + (hi - lo) * static_cast<double>(k) / (n - 1));
  return r;
}

}  // namespace

std::vector<Complex> nt_path(Target target, double opening, int n) {
  if (n < 2) throw ParamError("nt_path: need at least 2 points");
  if (target == Target::InfinityInHalfPlane) {
    if (!(opening > 0.0))
      throw ParamError("nt_path: half-plane opening must be positive");
  } else if (!(opening > 1.0)) {
    throw ParamError("nt_path: disc opening must exceed 1");
  }
  std::vector<Complex> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (double r : radii_schedule(n)) {
    const Complex z = kI * r;  // vertical ray, inside every approach region
    pts.push_back(target == Target::InfinityInHalfPlane ? z : to_disc(z));
  }
  return pts;
}

std::vector<Complex> nt_ray(double slope, int n) {
  if (n < 2) throw ParamError("nt_ray: need at least 2 points");
  if (!std::isfinite(slope)) throw ParamError("nt_ray: slope must be finite");
  const Complex dir{slope, 1.0};
  const Complex unit = dir / std::abs(dir);
  std::vector<Complex> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (double r : radii_schedule(n)) pts.push_back(r * unit);
  return pts;
}

maps::AnalyticMap conjugate_map(const maps::AnalyticMap& m) {
  maps::AnalyticMap out;
  out.name = "conj(" + m.name + ")";
  out.domain = m.domain == maps::Domain::HalfPlane ? maps::Domain::Disc
                                                   : maps::Domain::HalfPlane;
  out.self_map = m.self_map;
  auto eval = m.eval;
  if (m.domain == maps::Domain::HalfPlane) {
    out.eval = [eval](Complex w) { return to_disc(eval(to_halfplane(w))); };
    if (m.deriv) {
      auto deriv = m.deriv;
      out.deriv = [eval, deriv](Complex w) {
        const Complex z = to_halfplane(w);
        return to_disc_deriv(eval(z)) * deriv(z) * to_halfplane_deriv(w);
      };
    }
  } else {
    out.eval = [eval](Complex z) { return to_halfplane(eval(to_disc(z))); };
    if (m.deriv) {
      auto deriv = m.deriv;
      out.deriv = [eval, deriv](Complex z) {
        const Complex w = to_disc(z);
        return to_halfplane_deriv(eval(w)) * deriv(w) * to_disc_deriv(z);
      };
    }
  }
  return out;
}

}  // namespace hardylab::cayley
