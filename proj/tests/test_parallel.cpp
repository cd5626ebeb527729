#include <complex>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "hardylab/hardy.hpp"
#include "hardylab/parallel.hpp"
#include "hardylab/semigroup.hpp"

using namespace hardylab;
using Complex = std::complex<double>;

TEST_SUITE("parallel") {

TEST_CASE("serial and threaded modes give bitwise identical numbers") {
  const auto f = hardy::h_lambda(Complex(-1.0, 0.0));
  const auto fam = semigroup::family_lookup("example2", {});
  const auto grid = semigroup::default_grid(14);

  double norm_serial = 0.0, norm_par = 0.0;
  double law_serial = 0.0, law_par = 0.0;
  {
    par::ScopedMode guard(par::Mode::Serial);
    norm_serial = hardy::hardy_norm(f, 2.0).value;
    law_serial = semigroup::semigroup_law_residual(fam, grid, {{0.3, 0.7}});
  }
  {
    par::ScopedMode guard(par::Mode::OpenMP);
    norm_par = hardy::hardy_norm(f, 2.0).value;
    law_par = semigroup::semigroup_law_residual(fam, grid, {{0.3, 0.7}});
  }
  CHECK(norm_serial == norm_par);
  CHECK(law_serial == law_par);
}

TEST_CASE("index loop touches every slot exactly once") {
  std::vector<int> hits(2000, 0);
  par::for_index(static_cast<std::ptrdiff_t>(hits.size()),
                 [&](std::ptrdiff_t i) { hits[static_cast<std::size_t>(i)] += 1; });
  for (int h : hits) CHECK(h == 1);
}

TEST_CASE("exceptions thrown inside the loop surface to the caller") {
  auto boom = [] {
    par::for_index(100, [](std::ptrdiff_t i) {
      if (i == 37) throw std::runtime_error("hit 37");
    });
  };
  CHECK_THROWS_AS(boom(), std::runtime_error);
}

TEST_CASE("mode scoping restores the previous mode") {
  const auto before = par::mode();
  {
    par::ScopedMode guard(par::Mode::Serial);
    CHECK(par::mode() == par::Mode::Serial);
  }
  CHECK(par::mode() == before);
  CHECK(par::max_threads() >= 1);
}

}  // TEST_SUITE
