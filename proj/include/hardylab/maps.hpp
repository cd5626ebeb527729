#pragma once

#include <complex>
#include <functional>
#include <map>
#include <string>

namespace hardylab::maps {

using Complex = std::complex<double>;

enum class Domain { HalfPlane, Disc };

// A holomorphic map with optional closed-form derivative. self_map records
// that the image is claimed to stay inside the domain; eval does not verify
// the claim point-by-point (property tests sweep it instead).
struct AnalyticMap {
  std::string name;
  Domain domain = Domain::HalfPlane;
  bool self_map = false;
  std::function<Complex(Complex)> eval;
  std::function<Complex(Complex)> deriv;
};

bool in_domain(Domain d, Complex z);
void require_in_domain(Domain d, Complex z, const std::string& who);

Complex eval_map(const AnalyticMap& m, Complex z);

// Closed form when attached; otherwise a Cauchy integral over a circle of
// radius half the distance to the boundary, trapezoid rule with N = 64
// checked against N = 128 (ConvergenceError when doubling moves the value).
Complex derivative_at(const AnalyticMap& m, Complex z);

// Principal square root folded into the closed upper half-plane.
Complex sqrt_upper(Complex w);

AnalyticMap identity();
AnalyticMap dilation(double c);     // z -> c z, requires c > 0
AnalyticMap translation(double b);  // z -> z + b, b real
AnalyticMap mobius(double a, double b, double c, double d);  // ad - bc > 0
AnalyticMap example1_map(double t);
AnalyticMap example2_map(double t);
AnalyticMap sqrt_parabolic_map(double t);

// Name-based lookup used by the CLI; throws UnknownCatalogEntry for unknown
// names and ParamError for missing/extra/invalid parameters.
AnalyticMap catalog(const std::string& name,
                    const std::map<std::string, double>& params);

AnalyticMap compose(const AnalyticMap& outer, const AnalyticMap& inner);

}  // namespace hardylab::maps
