#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "hardylab/errors.hpp"
#include "hardylab/hardy.hpp"
#include "hardylab/maps.hpp"
#include "hardylab/operators.hpp"
#include "hardylab/semigroup.hpp"

using namespace hardylab;
using operators::Boundedness;
using Complex = std::complex<double>;

namespace {

semigroup::Family family(const char* name,
                         std::map<std::string, double> params = {}) {
  return semigroup::family_lookup(name, params);
}

}  // namespace

TEST_SUITE("operators") {

TEST_CASE("composition acts pointwise with the chain rule") {
  const auto f = hardy::h_lambda(Complex(-1.0, 0.0));
  const auto g = operators::compose_apply(maps::dilation(2.0), f);
  const Complex i(0.0, 1.0);
  CHECK(std::abs(g.eval(i) - Complex(0.0, -1.0 / 3.0)) < 1e-15);
  // (f o phi)' = phi' * f' o phi = 2 * -(2i+i)^{-2}
  CHECK(std::abs(g.deriv(i) - 2.0 / (9.0)) < 1e-15);
}

TEST_CASE("classification separates expanding and collapsing flows") {
  const auto up = operators::classify_boundedness(family("dilation", {{"c", 1.0}}), 2.0);
  CHECK(up.verdict == Boundedness::Bounded);
  CHECK(up.contraction);
  CHECK(std::abs(up.phi1_inf - std::exp(1.0)) < 1e-3 * std::exp(1.0));
  REQUIRE(up.delta.has_value());
  CHECK(std::abs(*up.delta - 1.0) < 1e-3);

  const auto down =
      operators::classify_boundedness(family("dilation", {{"c", -1.0}}), 2.0);
  CHECK(down.verdict == Boundedness::Bounded);
  CHECK_FALSE(down.contraction);
  CHECK(std::abs(down.phi1_inf - std::exp(-1.0)) < 1e-3);

  const auto flat = operators::classify_boundedness(family("sqrt_parabolic"), 2.0);
  CHECK(flat.verdict == Boundedness::Bounded);
  CHECK(flat.contraction);
  CHECK(std::abs(flat.phi1_inf - 1.0) < 1e-6);

  for (const char* name : {"example1", "example2"}) {
    CAPTURE(name);
    const auto r = operators::classify_boundedness(family(name), 2.0);
    CHECK(r.verdict == Boundedness::Unbounded);
  }

  const auto triv = operators::classify_boundedness(family("trivial"), 2.0);
  CHECK(triv.verdict == Boundedness::Bounded);
}

TEST_CASE("exact norms follow the rate power law") {
  CHECK(std::abs(operators::operator_norm(family("dilation", {{"c", 1.0}}),
                                          2.0, 1.0) -
                 std::exp(-0.5)) < 1e-4);
  CHECK(std::abs(operators::operator_norm(family("translation", {{"b", 1.0}}),
                                          2.0, 1.0) -
                 1.0) < 1e-6);
  CHECK(std::abs(operators::operator_norm(family("dilation", {{"c", -1.0}}),
                                          2.0, 1.0) -
                 std::exp(0.5)) < 1e-4);
  CHECK(operators::operator_norm(family("dilation", {{"c", 1.0}}), 2.0, 0.0) ==
        1.0);

  // multiplicativity of the closed formula itself
  const double a = operators::norm_from_rate(1.7, 2.0, 0.4);
  const double b = operators::norm_from_rate(1.7, 2.0, 1.3);
  const double c = operators::norm_from_rate(1.7, 2.0, 1.7);
  CHECK(std::abs(a * b - c) < 1e-9 * c);

  CHECK_THROWS_AS(
      (void)operators::operator_norm(family("example1"), 2.0, 1.0),
      UnboundedOperator);
}

TEST_CASE("measured ratios sit at the exact norm for extremal inputs") {
  const auto f = hardy::h_lambda(Complex(-1.0, 0.0));
  const double dil =
      operators::empirical_norm_ratio(family("dilation", {{"c", 1.0}}), f, 2.0, 1.0);
  CHECK(std::abs(dil - std::exp(-0.5)) < 1e-6);

  const double tra =
      operators::empirical_norm_ratio(family("translation", {{"b", 1.0}}), f, 2.0, 1.0);
  CHECK(std::abs(tra - 1.0) < 1e-7);
}

TEST_CASE("probe basket members are all in the space") {
  const auto probes = operators::default_probe_functions(2.0);
  CHECK(probes.size() == 5);
  for (const auto& f : probes) {
    CAPTURE(f.label);
    CHECK(hardy::membership(f, 2.0) == hardy::Membership::Member);
  }
}

TEST_CASE("orbit continuity matches the translation closed form") {
  // ||f(.+t) - f||_2 for f = 1/(z+i) is t sqrt(2 pi / (4 + t^2))
  const auto f = hardy::h_lambda(Complex(-1.0, 0.0));
  const std::vector<double> ts{1.0, 0.1, 0.01, 0.001};
  const auto probe = operators::strong_continuity_probe(
      family("translation", {{"b", 1.0}}), f, 2.0, ts);
  REQUIRE(probe.t == ts);
  REQUIRE(probe.residual.size() == ts.size());
  CHECK(std::abs(probe.f_norm - std::sqrt(std::numbers::pi)) < 1e-8);
  for (std::size_t k = 0; k < ts.size(); ++k) {
    const double exact =
        ts[k] * std::sqrt(2.0 * std::numbers::pi / (4.0 + ts[k] * ts[k]));
    CHECK(std::abs(probe.residual[k] - exact) < 1e-6 * exact);
  }
}

TEST_CASE("generator application uses the closed derivative") {
  const auto info = semigroup::generator(family("translation", {{"b", 1.0}}));
  const auto f = hardy::h_lambda(Complex(-2.0, 0.0));
  const auto gf = operators::gamma_apply(info, f);
  const Complex z(0.5, 0.8);
  const Complex expect =
      -2.0 * std::pow(z + Complex(0.0, 1.0), Complex(-3.0, 0.0));
  CHECK(std::abs(gf.eval(z) - expect) < 1e-12 * (1.0 + std::abs(expect)));

  CHECK(operators::domain_check(info, f, 2.0) == hardy::Membership::Member);
}

TEST_CASE("difference quotient residual halves with the step") {
  const auto info = semigroup::generator(family("translation", {{"b", 1.0}}));
  const auto f = hardy::h_lambda(Complex(-2.0, 0.0));
  const double r1 = operators::generator_residual(info, f, 2.0, 1e-2);
  const double r2 = operators::generator_residual(info, f, 2.0, 5e-3);
  CHECK(r1 > 0.0);
  const double ratio = r2 / r1;
  CHECK(ratio > 0.45);
  CHECK(ratio < 0.55);
}

TEST_CASE("weighted basis norms grow linearly under the generator") {
  SUBCASE("translation") {
    const auto info = semigroup::generator(family("translation", {{"b", 1.0}}));
    const auto gp = operators::nonuniform_growth_probe(info, 2.0, 5);
    REQUIRE(gp.n.size() == 5);
    for (std::size_t k = 0; k < gp.n.size(); ++k) {
      const int n = gp.n[k];
      const double closed = std::sqrt((1.0 + 3.0 * (2.0 * n + 1.0) * (2.0 * n + 1.0)) / 8.0);
      const double floor_closed = n * std::sqrt(3.0 / 8.0);
      CHECK(std::abs(gp.gamma_norm[k] - closed) < 1e-4 * closed);
      CHECK(std::abs(gp.floor_val[k] - floor_closed) < 1e-4 * (1.0 + floor_closed));
      CHECK(gp.gamma_norm[k] >= gp.floor_val[k] - 1e-6);
    }
  }
  SUBCASE("dilation") {
    const auto info = semigroup::generator(family("dilation", {{"c", 1.0}}));
    const auto gp = operators::nonuniform_growth_probe(info, 2.0, 5);
    for (std::size_t k = 0; k < gp.n.size(); ++k) {
      const int n = gp.n[k];
      const double closed = std::sqrt((3.0 + (2.0 * n + 1.0) * (2.0 * n + 1.0)) / 8.0);
      CHECK(std::abs(gp.gamma_norm[k] - closed) < 1e-4 * closed);
      CHECK(std::abs(gp.floor_val[k] - n / std::sqrt(8.0)) <
            1e-4 * (1.0 + n / std::sqrt(8.0)));
    }
  }
}

TEST_CASE("operator nonsense is rejected early") {
  CHECK_THROWS_AS(
      (void)operators::operator_norm(family("dilation", {{"c", 1.0}}), 0.0, 1.0),
      ParamError);
  CHECK_THROWS_AS((void)operators::operator_norm(
                      family("dilation", {{"c", 1.0}}), 2.0, -1.0),
                  ParamError);
}

}  // TEST_SUITE
