#pragma once

#include <complex>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hardylab/quadrature.hpp"

namespace hardylab::hardy {

using Complex = std::complex<double>;

// A holomorphic function on the upper half-plane whose formula extends
// continuously to the real line (all built-in test functions do: their
// singularities sit in the lower half-plane). deriv is the closed-form
// derivative when known.
struct HardyFunction {
  std::string label;
  std::function<Complex(Complex)> eval;
  std::function<Complex(Complex)> deriv;
};

// (z + i)^lambda; p-integrable on horizontal lines iff Re lambda < -1/p.
HardyFunction h_lambda(Complex lambda);

// pi^{-1/p} ((z-i)/(z+i))^n (z+i)^{-2/p}: unit-norm for every n >= 0.
HardyFunction basis_e(int n, double p);

// -p/(p+2) (z+i)^{-2/p-1}; its derivative is exactly (z+i)^{-2/p-2}.
HardyFunction omega_fn(double p);

// pi^{-1/2} (z+i)^{-1}: the normalised square-integrable power.
HardyFunction unit_h();

// Szegoe-type kernel i / (2 pi (w - conj z0)); requires Im z0 > 0.
HardyFunction reproducing_kernel(Complex z0);

// CLI dispatch: "h_lambda" (re[, im]), "e_n" (n), "omega", "unit_h",
// "kernel" (re, im). p feeds the p-dependent families.
HardyFunction test_function(const std::string& name,
                            const std::map<std::string, double>& params,
                            double p);

// Mean of |f|^p over the line at height y > 0 (whole-line integral).
// Throws DivergentIntegral when the tail analysis classifies it divergent.
double line_mean(const HardyFunction& f, double p, double y);

quadrature::LineIntegral line_mean_detail(const HardyFunction& f, double p,
                                          double y,
                                          const quadrature::LineOptions& opt =
                                              {});

enum class NormVerdict { Converged, Diverged, Inconclusive };

struct NormEstimate {
  double value = 0.0;       // norm estimate (p-th root of the sup of means)
  double p = 0.0;
  double y_used = 0.0;      // 0 marks the extrapolated y -> 0 limit
  double tail_bound = 0.0;  // truncation + extrapolation bound on value
  NormVerdict verdict = NormVerdict::Inconclusive;
  std::string note;
};

// Line means at heights 1, 1e-1, ..., 1e-6; checks monotone non-increase in
// y (a drop as y decreases flags MonotonicityViolation in the note and the
// verdict degrades to Inconclusive); extrapolates the four smallest heights
// to y = 0. Converged is only reported when tail_bound / value < 1e-6.
NormEstimate hardy_norm(const HardyFunction& f, double p);

std::vector<double> default_heights();

enum class Membership { Member, NonMember, Inconclusive };

Membership membership(const HardyFunction& f, double p);

// |f(z)|^p * 4 pi Im z / ||f||_p^p; at most 1 for members, with equality at
// z = i for the extremal power (z+i)^{-2/p}. Throws NotMember unless the
// norm certifies.
double growth_ratio(const HardyFunction& f, double p, Complex z);
double growth_ratio(const HardyFunction& f, const NormEstimate& est,
                    Complex z);

// Integral of f * conj(g) over the real line (boundary pairing).
Complex boundary_inner_product(const HardyFunction& f, const HardyFunction& g,
                               double abs_tail = 1e-9);

}  // namespace hardylab::hardy
