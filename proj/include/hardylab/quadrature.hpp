#pragma once

#include <complex>
#include <cstddef>
#include <functional>

namespace hardylab::quadrature {

using Complex = std::complex<double>;

struct Result {
  double value = 0.0;
  double error = 0.0;  // sum of per-panel Kronrod-Gauss deviations
  std::size_t evals = 0;
  std::size_t panels = 0;
};

// Adaptive Gauss-Kronrod 15(7) on [a, b]. Refinement proceeds in rounds:
// every panel over budget is bisected and the next round evaluates all fresh
// panels as one data-parallel batch. The refinement schedule depends only on
// the integrand values, never on thread scheduling, so results are identical
// in serial and OpenMP modes. Throws QuadratureError on non-finite integrand
// values or stalled refinement.
Result integrate(const std::function<double(double)>& g, double a, double b,
                 double rel_tol, double abs_tol, int initial_panels = 8);

struct ComplexResult {
  Complex value{0.0, 0.0};
  double error = 0.0;
  std::size_t evals = 0;
};

ComplexResult integrate_complex(const std::function<Complex(double)>& f,
                                double a, double b, double rel_tol,
                                double abs_tol, int initial_panels = 8);

// Straight-segment contour integral of f from a to b.
Complex segment_integral(const std::function<Complex(Complex)>& f, Complex a,
                         Complex b, double rel_tol = 1e-12,
                         double abs_tol = 1e-14);

// One-sided tail model g(x) ~ exp(log_coeff) * |x|^(-alpha) fitted from
// samples at |x| = X/2 and |x| = X. The coefficient is kept in log space so
// steep exponents do not overflow.
struct TailFit {
  double alpha = 0.0;
  double log_coeff = 0.0;
  bool usable = false;  // both samples finite and strictly positive
  bool zero = false;    // both samples exactly zero (tail treated as empty)
};

TailFit fit_tail(double g_half, double g_full, double x_full);

// Mass of the fitted model beyond X; +inf when alpha <= 1.
double tail_mass(const TailFit& fit, double x_from);

enum class LineFlag {
  Converged,      // bulk + stable modelled tail
  DivergedAlpha,  // fitted tail exponent at or below 1 (confirmed)
  TailDominates,  // stable fit whose tail mass swamps the bulk
  GuardBand,      // stable fit with exponent inside (1, 1 + guard]
  CapReached,     // truncation cap hit before the tail fit stabilised
};

struct LineIntegral {
  double value = 0.0;       // bulk + modelled tail
  double tail = 0.0;        // modelled tail mass included in value
  double tail_bound = 0.0;  // discrepancy between successive tail models
  double alpha_min = 0.0;   // weaker of the two side exponents (inf if none)
  double x_used = 0.0;      // final truncation point
  LineFlag flag = LineFlag::Converged;
  std::size_t evals = 0;
};

struct LineOptions {
  double rel_tol = 1e-10;     // per-window quadrature tolerance
  double x0 = 16.0;           // first truncation point
  double x_cap = 1e8;         // truncation cap
  double growth = 4.0;        // truncation growth factor per round
  double alpha_guard = 1e-3;  // exponents in (1, 1+guard] are inconclusive
  double tail_rel = 1e-8;     // accepted tail-model discrepancy, relative
  double dominance = 1e3;     // tail/bulk ratio treated as divergence
};

// Integral of g >= 0 over the whole real line, for integrands with
// power-law (or faster) decay. The truncation point grows until the
// two-point tail fits on both sides stabilise; the modelled tail mass is
// added to the value and the fit-to-fit discrepancy is reported as
// tail_bound. A confirmed exponent <= 1 is flagged divergent rather than
// integrated to the cap.
LineIntegral line_integral(const std::function<double(double)>& g,
                           const LineOptions& opt = {});

// Truncated whole-line integral of complex f whose modulus decays like a
// power with exponent > 1. Truncation grows until the modelled modulus tail
// drops below abs_tail.
ComplexResult complex_line_integral(const std::function<Complex(double)>& f,
                                    double abs_tail,
                                    const LineOptions& opt = {});

}  // namespace hardylab::quadrature
