#include <cmath>
#include <complex>
#include <numbers>

#include "doctest.h"
#include "hardylab/errors.hpp"
#include "hardylab/extrapolate.hpp"
#include "hardylab/quadrature.hpp"
#include "oracle.hpp"

using namespace hardylab;
using quadrature::LineFlag;
using Complex = std::complex<double>;

TEST_SUITE("quadrature") {

TEST_CASE("finite panels match closed forms and the simpson oracle") {
  const auto cubic = quadrature::integrate([](double x) { return x * x; },
                                           0.0, 1.0, 1e-12, 1e-14);
  CHECK(std::abs(cubic.value - 1.0 / 3.0) < 1e-14);

  auto wiggly = [](double x) { return std::cos(7.0 * x) * std::exp(-x); };
  const auto lib = quadrature::integrate(wiggly, 0.0, 3.0, 1e-12, 1e-14);
  const double ref = oracle::integrate(wiggly, 0.0, 3.0);
  CHECK(std::abs(lib.value - ref) < 1e-11);
  CHECK(lib.evals > 0);
}

TEST_CASE("segment integral of 2z recovers the endpoint difference") {
  const Complex got = quadrature::segment_integral(
      [](Complex z) { return 2.0 * z; }, Complex(0.0, 1.0), Complex(1.0, 2.0));
  CHECK(std::abs(got - Complex(-2.0, 4.0)) < 1e-12);

  const Complex osc = quadrature::segment_integral(
      [](Complex z) { return std::exp(z); }, Complex(0.0, 0.0),
      Complex(0.0, std::numbers::pi));
  CHECK(std::abs(osc - Complex(-2.0, 0.0)) < 1e-12);
}

TEST_CASE("gaussian line integral converges with negligible tail") {
  const auto r = quadrature::line_integral(
      [](double x) { return std::exp(-x * x); }, {});
  CHECK(r.flag == LineFlag::Converged);
  CHECK(std::abs(r.value - std::sqrt(std::numbers::pi)) < 1e-10);
  CHECK(r.tail <= 1e-8 * r.value);
}

TEST_CASE("cauchy density tail is fitted and included") {
  const auto r = quadrature::line_integral(
      [](double x) { return 1.0 / (1.0 + x * x); }, {});
  CHECK(r.flag == LineFlag::Converged);
  CHECK(std::abs(r.value - std::numbers::pi) < 1e-8 * std::numbers::pi);
  CHECK(r.alpha_min > 1.9);
  CHECK(r.alpha_min < 2.1);
  CHECK(r.tail > 0.0);
}

TEST_CASE("slow power tail converges against a gamma-function closed form") {
  // integral over R of (x^2+1)^{-3/4} = sqrt(pi) Gamma(1/4) / Gamma(3/4)
  const double exact = 5.2441151085842396;
  const auto r = quadrature::line_integral(
      [](double x) { return std::pow(x * x + 1.0, -0.75); }, {});
  CHECK(r.flag == LineFlag::Converged);
  CHECK(std::abs(r.value - exact) < 1e-6 * exact);
  CHECK(r.x_used > 1e3);  // the window must widen well past the default
}

TEST_CASE("tail exponents at or below one are flagged divergent") {
  const auto harmonic = quadrature::line_integral(
      [](double x) { return 1.0 / std::abs(Complex(x, 1.0)); }, {});
  CHECK(harmonic.flag == LineFlag::DivergedAlpha);
  CHECK(harmonic.alpha_min <= 1.0);

  const auto flat = quadrature::line_integral([](double) { return 0.5; }, {});
  CHECK(flat.flag == LineFlag::DivergedAlpha);
}

TEST_CASE("exponent just above one lands in the guard band") {
  // Pure power outside |x| <= 1 so the fitted exponent is exact from the
  // first window on; 1.0005 sits inside the default (1, 1.001] guard band.
  auto g = [](double x) {
    const double ax = std::abs(x);
    return ax <= 1.0 ? 1.0 : std::pow(ax, -1.0005);
  };
  const auto r = quadrature::line_integral(g, {});
  CHECK(r.flag == LineFlag::GuardBand);
  CHECK(r.alpha_min > 1.0);
  CHECK(r.alpha_min <= 1.001);
}

TEST_CASE("fat tail over an empty bulk is reported as tail dominated") {
  // Integrable, but virtually all mass sits in the extrapolated tail.
  auto g = [](double x) {
    const double ax = std::abs(x);
    return ax <= 1.0 ? 0.0 : std::pow(ax, -1.0001);
  };
  const auto r = quadrature::line_integral(g, {});
  CHECK(r.flag == LineFlag::TailDominates);
}

TEST_CASE("two-point tail fit recovers pure power laws exactly") {
  const double c = 3.0, alpha = 1.5, x = 100.0;
  const auto fit = quadrature::fit_tail(c * std::pow(x / 2.0, -alpha),
                                        c * std::pow(x, -alpha), x);
  CHECK(fit.usable);
  CHECK(std::abs(fit.alpha - alpha) < 1e-12);
  CHECK(std::abs(std::exp(fit.log_coeff) - c) < 1e-12 * c);
  // closed tail mass: c x^{1-alpha} / (alpha - 1)
  CHECK(std::abs(quadrature::tail_mass(fit, x) - 0.6) < 1e-12);

  const auto silent = quadrature::fit_tail(0.0, 0.0, x);
  CHECK(silent.zero);
  CHECK(quadrature::tail_mass(silent, x) == 0.0);

  const auto negative = quadrature::fit_tail(-1.0, 0.5, x);
  CHECK_FALSE(negative.usable);
}

TEST_CASE("neville extrapolation is exact on polynomials") {
  const std::vector<double> xs{0.4, 0.2, 0.1};
  std::vector<double> fs;
  for (double x : xs) fs.push_back(3.0 + 2.0 * x + 5.0 * x * x);
  CHECK(std::abs(extrapolate::neville_at_zero(xs, fs) - 3.0) < 1e-12);

  std::vector<Complex> cs;
  for (double x : xs) cs.push_back(Complex(1.0, -2.0) + Complex(0.0, 4.0) * x);
  CHECK(std::abs(extrapolate::neville_at_zero(xs, cs) - Complex(1.0, -2.0)) <
        1e-12);

  CHECK_THROWS_AS(extrapolate::neville_at_zero({0.1, 0.2}, std::vector<double>{1.0}),
                  ParamError);
}

TEST_CASE("line integration is deterministic") {
  auto g = [](double x) { return 1.0 / (1.0 + x * x); };
  const auto a = quadrature::line_integral(g, {});
  const auto b = quadrature::line_integral(g, {});
  CHECK(a.value == b.value);
  CHECK(a.tail == b.tail);
  CHECK(a.x_used == b.x_used);
  CHECK(a.evals == b.evals);
}

}  // TEST_SUITE
