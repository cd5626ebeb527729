#pragma once

#include <complex>
#include <string>
#include <vector>

#include "hardylab/hardy.hpp"
#include "hardylab/semigroup.hpp"

namespace hardylab::spectrum {

using Complex = std::complex<double>;

struct Candidate {
  Complex eigenvalue{0.0, 0.0};
  std::string eigenfunction;
  hardy::Membership verdict = hardy::Membership::Inconclusive;
  bool residual_checked = false;
  double ode_residual = 0.0;
  double flow_residual = 0.0;
  std::string note;
};

struct NuGrid {
  double re_min = -2.0, re_max = 2.0;
  int n_re = 9;
  double im_min = -2.0, im_max = 2.0;
  int n_im = 9;
};

NuGrid default_nu_grid();

// "re_min:re_max:n_re,im_min:im_max:n_im"
NuGrid parse_nu_grid(const std::string& text);

// Candidate eigenvalues k * multiplier for k = 0..k_max (interior fixed
// point lattice).
std::vector<Complex> interior_candidates(Complex multiplier, int k_max);

struct SpectrumReport {
  std::string family;
  double p = 0.0;
  semigroup::PointKind dw_kind = semigroup::PointKind::Infinity;
  std::string scan;
  std::vector<Candidate> candidates;  // deterministic order
  std::vector<Complex> sigma_pi;      // certified eigenvalues
};

// Point spectrum of the semigroup generator Gamma on H^p: candidates are
// k G'(d) with eigenfunction h^k (interior fixed point) or nu G(i) with
// eigenfunction exp(nu h) (boundary fixed point); a candidate enters
// sigma_pi only when its eigenfunction is a certified member, and certified
// members must additionally pass the pointwise eigen-equation residuals.
// Throws UnboundedOperator for non-bounded families, ModelUnavailable when
// the intertwining coordinate cannot be built.
SpectrumReport point_spectrum(const semigroup::Family& fam, double p,
                              int k_max = 20,
                              const NuGrid& grid = default_nu_grid());

struct EigenResidual {
  double ode = 0.0;   // max |G f' - lambda f| over the grid
  double flow = 0.0;  // max |f(phi_t(z)) - e^{lambda t} f(z)|
};

EigenResidual eigen_residual(const semigroup::GeneratorInfo& info,
                             const hardy::HardyFunction& f, Complex lambda,
                             const std::vector<Complex>& grid,
                             const std::vector<double>& times);

}  // namespace hardylab::spectrum
