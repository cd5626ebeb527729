#pragma once

#include <cstddef>
#include <vector>

#include "hardylab/errors.hpp"

namespace hardylab::extrapolate {

// Neville evaluation at 0 of the interpolating polynomial through
// (xs[k], fs[k]). T is double or std::complex<double>.
template <class T>
T neville_at_zero(const std::vector<double>& xs, const std::vector<T>& fs) {
  if (xs.size() != fs.size() || xs.empty())
    throw ParamError("neville_at_zero: bad node count");
  std::vector<T> p = fs;
  const std::size_t n = xs.size();
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = n - 1; i >= j; --i) {
      p[i] = p[i] + (p[i] - p[i - 1]) * (-xs[i] / (xs[i] - xs[i - j]));
      if (i == j) break;
    }
  }
  return p[n - 1];
}

}  // namespace hardylab::extrapolate
