#pragma once

#include <complex>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hardylab/maps.hpp"

namespace hardylab::semigroup {

using Complex = std::complex<double>;

enum class PointKind { Interior, BoundaryReal, Infinity };

// A point of the closed half-plane plus the point at infinity.
struct ExtendedPoint {
  PointKind kind = PointKind::Infinity;
  Complex value{0.0, 0.0};  // Interior: the point; BoundaryReal: (x, 0)
};

ExtendedPoint interior_point(Complex z);
ExtendedPoint boundary_point(double x);
ExtendedPoint infinity_point();

// Metric on the Riemann sphere (diameter 2).
double chordal(Complex a, Complex b);
double chordal_to_infinity(Complex a);
double extended_distance(const ExtendedPoint& a, const ExtendedPoint& b);

std::string describe(const ExtendedPoint& p);

// A one-parameter composition flow. at(t) yields the time-t self-map;
// closed-form attachments are used for cross-checks and fast paths.
struct Family {
  std::string name;
  std::map<std::string, double> params;
  bool trivial = false;
  std::function<maps::AnalyticMap(double)> at;
  std::function<Complex(Complex)> generator_eval;   // optional closed form
  std::function<Complex(Complex)> generator_deriv;  // optional closed form
  std::optional<ExtendedPoint> dw_closed;
  std::optional<double> phi1_inf_closed;
};

// Known families: trivial; dilation(c != 0); translation(b != 0);
// mobius_elliptic(c > 0) with example1 as its c = 1 alias; example2;
// sqrt_parabolic. Throws UnknownFamily / ParamError.
Family family_lookup(const std::string& name,
                     const std::map<std::string, double>& params);

// Time-t member with t >= 0 validated.
maps::AnalyticMap member_at(const Family& fam, double t);

// Deterministic interior lattice, roughly square, x in (-4.5, 4.5),
// y in (0.25, 2.5).
std::vector<Complex> default_grid(int n);

// max over the grid of |phi_{t+s}(z) - phi_t(phi_s(z))|.
double semigroup_law_residual(const Family& fam,
                              const std::vector<Complex>& grid,
                              const std::vector<std::pair<double, double>>&
                                  times);

// max over the grid of |phi_0(z) - z|.
double identity_residual(const Family& fam, const std::vector<Complex>& grid);

// Forward-difference limit of (phi_t(z) - z) / t through t = 1e-2, 1e-3,
// 1e-4 with polynomial extrapolation to t = 0; ConvergenceError when the
// extrapolation levels disagree beyond 1e-4.
Complex generator_numeric_at(const Family& fam, Complex z);

struct GeneratorInfo {
  Family fam;
  maps::AnalyticMap G;          // closed form when attached, else the limit
  bool closed_form = false;
  double cross_check = 0.0;     // max |numeric - closed| over the check grid
  double flow_residual = 0.0;   // max |G(phi_t(z)) - d/dt phi_t(z)| at t=0.5
  ExtendedPoint dw;
  std::optional<double> delta;  // filled by delta_limit
};

// Builds the generator, cross-checks closed forms, verifies the flow
// identity at t = 0.5, and resolves the Denjoy-Wolff point.
GeneratorInfo generator(const Family& fam);

// Iterates phi_1 from a generic interior point. Converges when the chordal
// displacement drops below 1e-8; otherwise classifies a monotone escape
// (displacement and chordal distance to the target both contracting).
// NoConvergence when the displacement does not contract.
ExtendedPoint dw_point(const Family& fam);

// Vanishing-at-dw quotient F with G(z) = F(z) (z - conj d)(z - d); only for
// interior Denjoy-Wolff points. The removable singularity at d is patched.
std::function<Complex(Complex)> berkson_porta_F(const GeneratorInfo& info);

// min over the grid of Im F (interior dw) or Im G (dw at infinity);
// NotApplicable for a finite boundary dw, where neither sign form applies.
double sign_condition_min(const GeneratorInfo& info,
                          const std::vector<Complex>& grid);

struct AngularDerivative {
  double value = 0.0;       // vertical-ray estimate of the limit of phi(z)/z
  double second_ray = 0.0;  // estimate along the slope-1/2 ray
  bool decreasing = false;  // modulus trend along the vertical ray
  double inf_sample = 0.0;  // sampled inf of Im phi(z) / Im z
};

AngularDerivative angular_derivative_detail(const maps::AnalyticMap& phi);

// Checked value: RayDisagreement when the rays differ by more than
// 1e-3 (absolute, relative above 1), InfimumMismatch when sampling the
// Julia-Caratheodory infimum undercuts the ray limit.
double angular_derivative_at_infinity(const maps::AnalyticMap& phi);

// Common limit of G(z)/z and G'(z) along the vertical ray; fills
// info.delta. DivergenceDetected when the quantities grow along the ray,
// ConvergenceError when they settle but disagree.
double delta_limit(GeneratorInfo& info);

// max over the grid of |Gtilde(w) - gamma'(z)^(-1)-side transport|, i.e. the
// residual of the disc/half-plane generator conjugation identity.
double conjugate_generator_residual(const GeneratorInfo& info,
                                    const std::vector<Complex>& grid);

enum class ModelKind { Koenigs, Abel };

// Intertwining coordinate: Koenigs h(phi_t) = e^{mt} h for an interior dw
// (normalised h(d) = 0, h'(d) = 1), Abel h(phi_t) = h + G(i) t for a
// boundary dw (normalised h(i) = 0, h'(i) = 1 via the G(i) step).
struct ModelFunction {
  ModelKind kind = ModelKind::Abel;
  Complex coefficient{0.0, 0.0};  // multiplier G'(d) or step G(i)
  Complex base{0.0, 1.0};         // d (Koenigs) or i (Abel)
  std::function<Complex(Complex)> h;
  std::function<Complex(Complex)> h_prime;
};

ModelFunction model_function(const GeneratorInfo& info);

// max over grid x times of the intertwining equation residual.
double model_equation_residual(const Family& fam, const ModelFunction& model,
                               const std::vector<Complex>& grid,
                               const std::vector<double>& times);

}  // namespace hardylab::semigroup
