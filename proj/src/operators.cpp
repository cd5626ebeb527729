#include "hardylab/operators.hpp"

#include <cmath>
#include <numbers>

#include "hardylab/errors.hpp"

namespace hardylab::operators {

namespace {

void require_p(double p, const std::string& who) {
  if (!(p > 0.0) || !std::isfinite(p))
    throw ParamError(who + ": exponent p must be positive and finite");
}

maps::AnalyticMap as_map(const hardy::HardyFunction& f) {
  maps::AnalyticMap m;
  m.name = f.label;
  m.domain = maps::Domain::HalfPlane;
  m.self_map = false;
  m.eval = f.eval;
  m.deriv = f.deriv;
  return m;
}

}  // namespace

hardy::HardyFunction compose_apply(const maps::AnalyticMap& phi,
                                   const hardy::HardyFunction& f) {
  if (phi.domain != maps::Domain::HalfPlane || !phi.self_map)
    throw ParamError("compose_apply: needs a half-plane self-map");
  hardy::HardyFunction out;
  out.label = f.label + "*" + phi.name;
  auto fe = f.eval;
  auto pe = phi.eval;
  out.eval = [fe, pe](hardy::Complex z) { return fe(pe(z)); };
  if (f.deriv && phi.deriv) {
    auto fd = f.deriv;
    auto pd = phi.deriv;
    out.deriv = [fd, pd, pe](hardy::Complex z) { return fd(pe(z)) * pd(z); };
  }
  return out;
}

BoundednessReport classify_boundedness(const semigroup::Family& fam,
                                       double p) {
  require_p(p, "classify_boundedness");
  BoundednessReport rep;
  if (fam.trivial) {
    rep.verdict = Boundedness::Bounded;
    rep.phi1_inf = 1.0;
    rep.delta = 0.0;
    rep.contraction = true;
    rep.note = "identity semigroup";
    return rep;
  }

  const auto phi1 = semigroup::member_at(fam, 1.0);
  const auto detail = semigroup::angular_derivative_detail(phi1);
  rep.phi1_inf = detail.value;

  if (detail.value < 1e-2) {
    if (detail.decreasing) {
      rep.verdict = Boundedness::Unbounded;
      rep.note = "angular derivative at infinity vanishes along the ray";
    } else {
      rep.verdict = Boundedness::Inconclusive;
      rep.note = "small angular derivative without a decreasing trend";
    }
    return rep;
  }

  try {
    rep.phi1_inf = semigroup::angular_derivative_at_infinity(phi1);
  } catch (const Error& e) {
    rep.verdict = Boundedness::Inconclusive;
    rep.note = e.what();
    return rep;
  }

  if (fam.phi1_inf_closed &&
      std::abs(rep.phi1_inf - *fam.phi1_inf_closed) >
          1e-3 * std::max(1.0, *fam.phi1_inf_closed)) {
    rep.verdict = Boundedness::Inconclusive;
    rep.note = "measured angular derivative misses the attached value";
    return rep;
  }

  semigroup::GeneratorInfo info;
  try {
    info = semigroup::generator(fam);
    const double delta = semigroup::delta_limit(info);
    rep.delta = delta;
    if (std::abs(rep.phi1_inf - std::exp(delta)) >
        1e-3 * std::max(1.0, std::exp(delta))) {
      rep.verdict = Boundedness::Inconclusive;
      rep.note = "angular derivative and e^delta disagree";
      return rep;
    }
  } catch (const Error& e) {
    rep.verdict = Boundedness::Inconclusive;
    rep.note = std::string("generator rate unavailable: ") + e.what();
    return rep;
  }

  rep.contraction = info.dw.kind == semigroup::PointKind::Infinity;
  if (rep.contraction && rep.phi1_inf < 1.0 - 1e-9) {
    rep.verdict = Boundedness::Inconclusive;
    rep.note = "fixed point at infinity but angular derivative below 1";
    return rep;
  }
  rep.verdict = Boundedness::Bounded;
  return rep;
}

double norm_from_rate(double phi1_inf, double p, double t) {
  require_p(p, "norm_from_rate");
  if (!(t >= 0.0)) throw ParamError("norm_from_rate: time must be >= 0");
  if (!(phi1_inf > 0.0))
    throw ParamError("norm_from_rate: rate must be positive");
  return std::pow(phi1_inf, -t / p);
}

double operator_norm(const semigroup::Family& fam, double p, double t) {
  require_p(p, "operator_norm");
  if (!(t >= 0.0)) throw ParamError("operator_norm: time must be >= 0");
  const auto rep = classify_boundedness(fam, p);
  if (rep.verdict != Boundedness::Bounded)
    throw UnboundedOperator("operator_norm: " + fam.name +
                            " is not certified bounded (" + rep.note + ")");
  return norm_from_rate(rep.phi1_inf, p, t);
}

double empirical_norm_ratio(const semigroup::Family& fam,
                            const hardy::HardyFunction& f, double p,
                            double t) {
  require_p(p, "empirical_norm_ratio");
  const auto base = hardy::hardy_norm(f, p);
  if (base.verdict != hardy::NormVerdict::Converged)
    throw NotMember("empirical_norm_ratio: " + f.label +
                    " has no certified norm");
  const auto composed = compose_apply(semigroup::member_at(fam, t), f);
  const auto moved = hardy::hardy_norm(composed, p);
  if (moved.verdict != hardy::NormVerdict::Converged)
    throw NotMember("empirical_norm_ratio: composed function has no "
                    "certified norm");
  return moved.value / base.value;
}

std::vector<hardy::HardyFunction> default_probe_functions(double p) {
  require_p(p, "default_probe_functions");
  std::vector<hardy::HardyFunction> probes;
  probes.push_back(hardy::h_lambda({-2.0 / p, 0.0}));
  probes.push_back(hardy::h_lambda({-2.0 / p - 1.0, 0.0}));
  probes.push_back(hardy::basis_e(1, p));
  probes.push_back(hardy::basis_e(2, p));
  probes.push_back(hardy::omega_fn(p));
  return probes;
}

ContinuityProbe strong_continuity_probe(const semigroup::Family& fam,
                                        const hardy::HardyFunction& f,
                                        double p,
                                        const std::vector<double>& t_seq) {
  require_p(p, "strong_continuity_probe");
  if (t_seq.empty())
    throw ParamError("strong_continuity_probe: empty time sequence");
  const auto rep = classify_boundedness(fam, p);
  if (rep.verdict != Boundedness::Bounded)
    throw UnboundedOperator("strong_continuity_probe: " + fam.name +
                            " is not certified bounded");
  const auto base = hardy::hardy_norm(f, p);
  if (base.verdict != hardy::NormVerdict::Converged)
    throw NotMember("strong_continuity_probe: " + f.label +
                    " has no certified norm");
  ContinuityProbe probe;
  probe.t = t_seq;
  probe.f_norm = base.value;
  for (double t : t_seq) {
    if (t == 0.0) {
      probe.residual.push_back(0.0);
      continue;
    }
    const auto phi = semigroup::member_at(fam, t);
    hardy::HardyFunction diff;
    diff.label = f.label + "*phi_t - " + f.label;
    auto fe = f.eval;
    auto pe = phi.eval;
    diff.eval = [fe, pe](hardy::Complex z) { return fe(pe(z)) - fe(z); };
    if (f.deriv && phi.deriv) {
      auto fd = f.deriv;
      auto pd = phi.deriv;
      diff.deriv = [fd, pd, pe](hardy::Complex z) {
        return fd(pe(z)) * pd(z) - fd(z);
      };
    }
    probe.residual.push_back(hardy::hardy_norm(diff, p).value);
  }
  return probe;
}

hardy::HardyFunction gamma_apply(const semigroup::GeneratorInfo& info,
                                 const hardy::HardyFunction& f) {
  hardy::HardyFunction out;
  out.label = "Gamma[" + f.label + "]";
  auto ge = info.G.eval;
  if (f.deriv) {
    auto fd = f.deriv;
    out.eval = [ge, fd](hardy::Complex z) { return ge(z) * fd(z); };
  } else {
    auto fmap = as_map(f);
    out.eval = [ge, fmap](hardy::Complex z) {
      return ge(z) * maps::derivative_at(fmap, z);
    };
  }
  return out;
}

hardy::Membership domain_check(const semigroup::GeneratorInfo& info,
                               const hardy::HardyFunction& f, double p) {
  require_p(p, "domain_check");
  return hardy::membership(gamma_apply(info, f), p);
}

double generator_residual(const semigroup::GeneratorInfo& info,
                          const hardy::HardyFunction& f, double p, double t) {
  require_p(p, "generator_residual");
  if (!(t > 0.0)) throw ParamError("generator_residual: time must be > 0");
  const auto phi = semigroup::member_at(info.fam, t);
  const auto gf = gamma_apply(info, f);
  hardy::HardyFunction diff;
  diff.label = "gen_res[" + f.label + "]";
  auto fe = f.eval;
  auto pe = phi.eval;
  auto ge = gf.eval;
  diff.eval = [fe, pe, ge, t](hardy::Complex z) {
    return (fe(pe(z)) - fe(z)) / t - ge(z);
  };
  return hardy::hardy_norm(diff, p).value;
}

GrowthProbe nonuniform_growth_probe(const semigroup::GeneratorInfo& info,
                                    double p, int n_max) {
  if (!(p >= 1.0) || !std::isfinite(p))
    throw ParamError("nonuniform_growth_probe: needs p >= 1");
  if (n_max < 1)
    throw ParamError("nonuniform_growth_probe: need at least one index");
  const auto omega = hardy::omega_fn(p);
  const auto g_omega = gamma_apply(info, omega);
  const auto base = hardy::hardy_norm(g_omega, p);
  if (base.verdict != hardy::NormVerdict::Converged)
    throw NotApplicable(
        "nonuniform_growth_probe: G omega' has no certified norm for " +
        info.fam.name);
  GrowthProbe probe;
  probe.g_omega_norm = base.value;
  const double c = std::pow(std::numbers::pi, -1.0 / p);
  for (int n = 1; n <= n_max; ++n) {
    const auto en = hardy::basis_e(n, p);
    const auto gen = gamma_apply(info, en);
    const auto nrm = hardy::hardy_norm(gen, p);
    if (nrm.verdict != hardy::NormVerdict::Converged)
      throw NotApplicable("nonuniform_growth_probe: G e_" +
                          std::to_string(n) + "' has no certified norm");
    probe.n.push_back(n);
    probe.gamma_norm.push_back(nrm.value);
    probe.floor_val.push_back(n * c * base.value);
  }
  return probe;
}

}  // namespace hardylab::operators
