#include "hardylab/sampling.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

namespace hardylab::sampling {

std::uint64_t global_seed() {
  static const std::uint64_t seed = [] {
    const char* env = std::getenv("HARDYLAB_SEED");
    if (!env || !*env) return std::uint64_t{0};
    return static_cast<std::uint64_t>(std::strtoull(env, nullptr, 10));
  }();
  return seed;
}

std::mt19937_64 engine(std::uint64_t stream) {
  // splitmix-style mix so distinct streams decorrelate even for seed 0
  std::uint64_t x = global_seed() + 0x9e3779b97f4a7c15ULL * (stream + 1);
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return std::mt19937_64{x};
}

std::vector<Complex> halfplane_points(int n, std::mt19937_64& eng,
                                      double x_span, double y_min,
                                      double y_max) {
  std::uniform_real_distribution<double> ux(-x_span, x_span);
  std::uniform_real_distribution<double> uy(std::log(y_min), std::log(y_max));
  std::vector<Complex> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double x = ux(eng);
    const double y = std::exp(uy(eng));
    pts.emplace_back(x, y);
  }
  return pts;
}

std::vector<Complex> disc_points(int n, std::mt19937_64& eng, double r_max) {
  std::uniform_real_distribution<double> ur(0.0, r_max);
  std::uniform_real_distribution<double> uth(0.0, 2.0 * std::numbers::pi);
  std::vector<Complex> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) pts.push_back(std::polar(ur(eng), uth(eng)));
  return pts;
}

}  // namespace hardylab::sampling
