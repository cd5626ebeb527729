#include <cmath>
#include <complex>

#include "doctest.h"
#include "hardylab/cayley.hpp"
#include "hardylab/errors.hpp"
#include "hardylab/maps.hpp"
#include "hardylab/sampling.hpp"

using namespace hardylab;
using Complex = std::complex<double>;

TEST_SUITE("cayley") {

TEST_CASE("transform and inverse are mutual bijections") {
  auto eng = sampling::engine(201);
  for (Complex z : sampling::halfplane_points(200, eng)) {
    const Complex w = cayley::to_disc(z);
    CHECK(std::abs(w) < 1.0);
    CHECK(std::abs(cayley::to_halfplane(w) - z) < 1e-12 * (1.0 + std::abs(z)));
  }
  for (Complex w : sampling::disc_points(200, eng, 0.99)) {
    const Complex z = cayley::to_halfplane(w);
    CHECK(z.imag() > 0.0);
    CHECK(std::abs(cayley::to_disc(z) - w) < 1e-12);
  }
  CHECK(std::abs(cayley::to_disc(Complex(0.0, 1.0))) < 1e-15);
  CHECK(std::abs(cayley::to_halfplane(Complex(0.0, 0.0)) - Complex(0.0, 1.0)) <
        1e-15);
}

TEST_CASE("derivatives of the two directions multiply to one") {
  auto eng = sampling::engine(202);
  for (Complex z : sampling::halfplane_points(100, eng)) {
    const Complex w = cayley::to_disc(z);
    const Complex chain =
        cayley::to_disc_deriv(z) * cayley::to_halfplane_deriv(w);
    CHECK(std::abs(chain - 1.0) < 1e-12);
  }
  // at the center: gamma'(0) = 2i, gamma^{-1}'(i) = -i/2
  CHECK(std::abs(cayley::to_halfplane_deriv(Complex(0.0, 0.0)) -
                 Complex(0.0, 2.0)) < 1e-15);
  CHECK(std::abs(cayley::to_disc_deriv(Complex(0.0, 1.0)) -
                 Complex(0.0, -0.5)) < 1e-15);
}

TEST_CASE("points outside the model domains are rejected") {
  CHECK_THROWS_AS((void)cayley::to_disc(Complex(1.0, 0.0)), DomainError);
  CHECK_THROWS_AS((void)cayley::to_disc(Complex(0.5, -0.1)), DomainError);
  CHECK_THROWS_AS((void)cayley::to_halfplane(Complex(1.0, 0.0)), DomainError);
  CHECK_THROWS_AS((void)cayley::to_halfplane(Complex(0.0, 1.2)), DomainError);
}

TEST_CASE("approach path to infinity follows a geometric radius schedule") {
  const auto pts = cayley::nt_path(cayley::Target::InfinityInHalfPlane, 1.0, 3);
  REQUIRE(pts.size() == 3);
  for (Complex z : pts) CHECK(z.real() == 0.0);
  CHECK(std::abs(pts[0].imag() - 10.0) < 1e-9);
  CHECK(std::abs(pts[1].imag() - 3162.2776601683795) < 1e-6);
  CHECK(std::abs(pts[2].imag() - 1e6) < 1e-3);
}

TEST_CASE("approach path to one stays inside its stolz sector") {
  const auto sector = cayley::sector_at_one(2.0);
  const auto pts = cayley::nt_path(cayley::Target::OneInDisc, 2.0, 8);
  REQUIRE(pts.size() == 8);
  double prev = 2.0;
  for (Complex w : pts) {
    CHECK(cayley::sector_contains(sector, w));
    const double gap = std::abs(1.0 - w);
    CHECK(gap < prev);
    prev = gap;
  }
  CHECK(prev < 1e-5);
  CHECK_THROWS_AS((void)cayley::nt_path(cayley::Target::OneInDisc, 1.0, 5),
                  ParamError);
}

TEST_CASE("sector membership is strict") {
  const auto t1 = cayley::sector_at_infinity(1.0);
  CHECK(cayley::sector_contains(t1, Complex(1.0, 2.0)));
  CHECK_FALSE(cayley::sector_contains(t1, Complex(2.0, 1.0)));
  CHECK_FALSE(cayley::sector_contains(t1, Complex(1.0, 1.0)));

  const auto s2 = cayley::sector_at_one(2.0);
  CHECK(cayley::sector_contains(s2, Complex(0.0, 0.0)));
  CHECK(cayley::sector_contains(s2, Complex(0.99, 0.0)));
  CHECK_FALSE(cayley::sector_contains(s2, Complex(-0.5, 0.0)));

  CHECK_THROWS_AS((void)cayley::sector_at_infinity(0.0), ParamError);
  CHECK_THROWS_AS((void)cayley::sector_at_one(1.0), ParamError);
}

TEST_CASE("sectors at one transport into sectors at infinity") {
  const auto s = cayley::sector_at_one(2.0);
  const auto t = cayley::sector_at_infinity(2.0);
  auto eng = sampling::engine(203);
  int checked = 0;
  while (checked < 200) {
    for (Complex w : sampling::disc_points(64, eng)) {
      if (!cayley::sector_contains(s, w)) continue;
      CHECK(cayley::sector_contains(t, cayley::to_halfplane(w)));
      ++checked;
    }
  }
}

TEST_CASE("conjugation moves half-plane maps to the disc and back") {
  const auto phi = maps::dilation(2.0);
  const auto psi = cayley::conjugate_map(phi);
  CHECK(psi.domain == maps::Domain::Disc);
  CHECK(std::abs(psi.eval(Complex(0.0, 0.0)) - Complex(1.0 / 3.0, 0.0)) <
        1e-14);

  const auto back = cayley::conjugate_map(psi);
  CHECK(back.domain == maps::Domain::HalfPlane);
  auto eng = sampling::engine(204);
  for (Complex z : sampling::halfplane_points(100, eng)) {
    CHECK(std::abs(back.eval(z) - phi.eval(z)) < 1e-10 * (1.0 + std::abs(z)));
  }

  // disc rotation conjugates to an elliptic self-map fixing i
  maps::AnalyticMap rot;
  rot.name = "rotation";
  rot.domain = maps::Domain::Disc;
  rot.self_map = true;
  rot.eval = [](Complex w) { return std::polar(1.0, 1.0) * w; };
  rot.deriv = [](Complex) { return std::polar(1.0, 1.0); };
  const auto ell = cayley::conjugate_map(rot);
  CHECK(ell.domain == maps::Domain::HalfPlane);
  CHECK(std::abs(ell.eval(Complex(0.0, 1.0)) - Complex(0.0, 1.0)) < 1e-14);
}

}  // TEST_SUITE
