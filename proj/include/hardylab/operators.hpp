#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hardylab/hardy.hpp"
#include "hardylab/semigroup.hpp"

namespace hardylab::operators {

// f o phi with the chain-rule derivative when both closed forms exist.
hardy::HardyFunction compose_apply(const maps::AnalyticMap& phi,
                                   const hardy::HardyFunction& f);

enum class Boundedness { Bounded, Unbounded, Inconclusive };

struct BoundednessReport {
  Boundedness verdict = Boundedness::Inconclusive;
  double phi1_inf = 0.0;        // measured angular derivative at infinity
  std::optional<double> delta;  // generator rate when its limit converged
  bool contraction = false;     // Denjoy-Wolff point at infinity
  std::string note;
};

// Bounded iff the time-1 angular derivative at infinity is positive:
// measured > 1e-2 accepts, < 1e-2 with a decreasing ray trend rejects.
// Consistency cross-checks (two rays, sampled infimum, e^delta, attached
// closed forms) degrade the verdict to Inconclusive instead of lying.
BoundednessReport classify_boundedness(const semigroup::Family& fam,
                                       double p);

double norm_from_rate(double phi1_inf, double p, double t);

// Exact operator norm phi1'(inf)^{-t/p}; throws UnboundedOperator unless
// the classification says Bounded.
double operator_norm(const semigroup::Family& fam, double p, double t);

// ||f o phi_t||_p / ||f||_p measured through hardy_norm on both sides.
double empirical_norm_ratio(const semigroup::Family& fam,
                            const hardy::HardyFunction& f, double p,
                            double t);

// Five members for every p: two pure powers, two oscillating basis
// functions, and the slow-decay witness.
std::vector<hardy::HardyFunction> default_probe_functions(double p);

struct ContinuityProbe {
  std::vector<double> t;
  std::vector<double> residual;  // ||f o phi_t - f||_p
  double f_norm = 0.0;
};

ContinuityProbe strong_continuity_probe(const semigroup::Family& fam,
                                        const hardy::HardyFunction& f,
                                        double p,
                                        const std::vector<double>& t_seq);

// Gamma f = G f'.
hardy::HardyFunction gamma_apply(const semigroup::GeneratorInfo& info,
                                 const hardy::HardyFunction& f);

// Domain membership of f under Gamma: is G f' back in the space?
hardy::Membership domain_check(const semigroup::GeneratorInfo& info,
                               const hardy::HardyFunction& f, double p);

// || (f o phi_t - f) / t - G f' ||_p; halves roughly with t near 0.
double generator_residual(const semigroup::GeneratorInfo& info,
                          const hardy::HardyFunction& f, double p, double t);

struct GrowthProbe {
  std::vector<int> n;
  std::vector<double> gamma_norm;  // L_n = ||G e_n'||_p
  std::vector<double> floor_val;   // (n / pi^{1/p}) ||G omega'||_p
  double g_omega_norm = 0.0;
};

// Witnesses that ||Gamma|| grows at least linearly along the basis
// directions, the obstruction to uniform continuity.
GrowthProbe nonuniform_growth_probe(const semigroup::GeneratorInfo& info,
                                    double p, int n_max);

}  // namespace hardylab::operators
