#include <cmath>
#include <complex>
#include <map>
#include <vector>

#include "doctest.h"
#include "hardylab/errors.hpp"
#include "hardylab/maps.hpp"
#include "hardylab/sampling.hpp"

using namespace hardylab;
using maps::AnalyticMap;
using Complex = std::complex<double>;

namespace {

std::vector<AnalyticMap> self_map_catalog() {
  return {maps::identity(),          maps::dilation(2.0),
          maps::dilation(0.3),       maps::translation(1.5),
          maps::translation(-0.7),   maps::mobius(2.0, 1.0, 1.0, 1.0),
          maps::example1_map(0.8),   maps::example2_map(0.6),
          maps::sqrt_parabolic_map(0.4)};
}

// Interior box away from the boundary and from the catalog's worst
// singularities (z = -1 for mobius/example2), so finite differences behave.
std::vector<Complex> interior_points(int n, std::uint64_t stream) {
  auto eng = sampling::engine(stream);
  return sampling::halfplane_points(n, eng, 3.0, 0.5, 5.0);
}

}  // namespace

TEST_SUITE("maps") {

TEST_CASE("catalog members keep the upper half-plane inside itself") {
  auto eng = sampling::engine(101);
  const auto pts = sampling::halfplane_points(500, eng);
  for (const auto& m : self_map_catalog()) {
    CAPTURE(m.name);
    CHECK(m.self_map);
    for (Complex z : pts) {
      const Complex w = m.eval(z);
      CHECK(w.imag() > 0.0);
    }
  }
}

TEST_CASE("evaluations reject points outside the domain") {
  const auto m = maps::dilation(2.0);
  CHECK_THROWS_AS((void)maps::eval_map(m, Complex(1.0, -1.0)), DomainError);
  CHECK_THROWS_AS((void)maps::eval_map(m, Complex(1.0, 0.0)), DomainError);
  CHECK(maps::in_domain(maps::Domain::HalfPlane, Complex(0.0, 1e-9)));
  CHECK_FALSE(maps::in_domain(maps::Domain::Disc, Complex(1.0, 0.0)));
  CHECK(maps::in_domain(maps::Domain::Disc, Complex(0.5, 0.2)));
}

TEST_CASE("closed evaluations satisfy the cauchy-riemann equations") {
  const double h = 1e-5;
  for (const auto& m : self_map_catalog()) {
    CAPTURE(m.name);
    for (Complex z : interior_points(100, 102)) {
      const Complex dx = (m.eval(z + h) - m.eval(z - h)) / (2.0 * h);
      const Complex dy =
          (m.eval(z + Complex(0.0, h)) - m.eval(z - Complex(0.0, h))) /
          Complex(0.0, 2.0 * h);
      CHECK(std::abs(dx - dy) < 1e-7 * (1.0 + std::abs(dx)));
    }
  }
}

TEST_CASE("circle-rule derivatives agree with the closed forms") {
  for (const auto& m : self_map_catalog()) {
    CAPTURE(m.name);
    AnalyticMap numeric = m;
    numeric.deriv = nullptr;  // force the circle rule
    for (Complex z : interior_points(60, 103)) {
      const Complex closed = maps::derivative_at(m, z);
      const Complex ring = maps::derivative_at(numeric, z);
      CHECK(std::abs(ring - closed) < 1e-8 * (1.0 + std::abs(closed)));
    }
  }
}

TEST_CASE("circle rule refuses integrands that do not settle") {
  AnalyticMap broken;
  broken.name = "broken";
  broken.domain = maps::Domain::HalfPlane;
  broken.eval = [](Complex z) {
    return z.real() > 0.0 ? z * z : z * z + Complex(1e-3, 0.0);
  };
  CHECK_THROWS_AS((void)maps::derivative_at(broken, Complex(0.0, 1.0)),
                  ConvergenceError);
}

TEST_CASE("log-power family matches its polar closed form") {
  // Im of exp(e^{-t} log(1+z)) is |1+z|^{e^{-t}} sin(e^{-t} arg(1+z)).
  for (double t : {0.3, 1.0}) {
    const auto m = maps::example2_map(t);
    const double s = std::exp(-t);
    for (Complex z : interior_points(200, 104)) {
      const Complex w = 1.0 + z;
      const double expected = std::pow(std::abs(w), s) * std::sin(s * std::arg(w));
      CHECK(std::abs(m.eval(z).imag() - expected) <
            1e-10 * (1.0 + std::abs(expected)));
    }
  }
}

TEST_CASE("square root map uses the branch with positive imaginary part") {
  CHECK(std::abs(maps::sqrt_upper(Complex(-4.0, 0.0)) - Complex(0.0, 2.0)) <
        1e-15);
  CHECK(std::abs(maps::sqrt_upper(Complex(9.0, 0.0)) - Complex(3.0, 0.0)) <
        1e-15);
  const double r = std::sqrt(2.0);
  CHECK(std::abs(maps::sqrt_upper(Complex(0.0, -4.0)) - Complex(-r, r)) <
        1e-14);

  const auto m = maps::sqrt_parabolic_map(0.4);
  auto eng = sampling::engine(105);
  for (Complex z : sampling::halfplane_points(200, eng)) {
    const Complex w = m.eval(z);
    CHECK(w.imag() > 0.0);
    // defining identity: phi(z)^2 = z^2 - t
    CHECK(std::abs(w * w - (z * z - 0.4)) < 1e-9 * (1.0 + std::abs(z * z)));
  }
}

TEST_CASE("constructors validate their parameters") {
  CHECK_THROWS_AS((void)maps::dilation(0.0), ParamError);
  CHECK_THROWS_AS((void)maps::dilation(-2.0), ParamError);
  CHECK_THROWS_AS((void)maps::mobius(1.0, 0.0, 0.0, -1.0), ParamError);
  CHECK_THROWS_AS((void)maps::example1_map(-0.1), ParamError);
  CHECK_THROWS_AS((void)maps::catalog("frobnicate", {}), UnknownCatalogEntry);
  CHECK_THROWS_AS((void)maps::catalog("dilation", {}), ParamError);
  CHECK_THROWS_AS(
      (void)maps::catalog("dilation", {{"c", 2.0}, {"junk", 1.0}}),
      ParamError);
  const auto m = maps::catalog("mobius",
                               {{"a", 2.0}, {"b", 1.0}, {"c", 1.0}, {"d", 1.0}});
  const Complex z(0.0, 1.0);
  CHECK(std::abs(m.eval(z) - (2.0 * z + 1.0) / (z + 1.0)) < 1e-15);
}

TEST_CASE("composition chains evaluations and derivatives") {
  const auto m = maps::compose(maps::dilation(2.0), maps::translation(1.0));
  const Complex z(0.0, 1.0);
  CHECK(std::abs(m.eval(z) - Complex(2.0, 2.0)) < 1e-15);
  CHECK(std::abs(maps::derivative_at(m, z) - Complex(2.0, 0.0)) < 1e-12);
  CHECK(m.self_map);

  // chain rule against closed forms on a nontrivial pair
  const auto inner = maps::example1_map(0.5);
  const auto outer = maps::dilation(3.0);
  const auto chained = maps::compose(outer, inner);
  for (Complex w : interior_points(40, 106)) {
    const Complex expect =
        maps::derivative_at(outer, inner.eval(w)) *
        maps::derivative_at(inner, w);
    CHECK(std::abs(maps::derivative_at(chained, w) - expect) <
          1e-10 * (1.0 + std::abs(expect)));
  }
}

}  // TEST_SUITE
