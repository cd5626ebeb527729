#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace hardylab::sampling {

using Complex = std::complex<double>;

// Seed taken from HARDYLAB_SEED (default 0). Every sampling site derives its
// engine from this plus a fixed stream tag, so runs are reproducible.
std::uint64_t global_seed();

std::mt19937_64 engine(std::uint64_t stream);

// Points in the open upper half-plane: x uniform in [-x_span, x_span],
// log(y) uniform in [log y_min, log y_max].
std::vector<Complex> halfplane_points(int n, std::mt19937_64& eng,
                                      double x_span = 50.0,
                                      double y_min = 1e-3, double y_max = 20.0);

std::vector<Complex> disc_points(int n, std::mt19937_64& eng,
                                 double r_max = 0.999);

}  // namespace hardylab::sampling
