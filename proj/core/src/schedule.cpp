#include "zomd/schedule.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace zomd {

namespace {

// Theorem-optimal tau for Delta > 0. The middle factor differs per regime:
// R0 (robust), R0^{2k/(1+k)} D^{(1-k)/(1+k)} (clip expectation), D (high
// probability).
double optimal_tau(Regime regime, const GeometryConstants& c,
                   const AssumptionParams& p, std::int64_t T) {
  const double rate = std::pow(static_cast<double>(T),
                               -p.kappa / (1.0 + p.kappa));
  double mid;
  switch (regime) {
    case Regime::RobustExpectation:
      mid = c.r0;
      break;
    case Regime::ClipExpectation:
      mid = std::pow(c.r0, 2.0 * p.kappa / (1.0 + p.kappa)) *
            std::pow(c.d_psi, (1.0 - p.kappa) / (1.0 + p.kappa));
      break;
    default:
      mid = c.d_psi;
  }
  const double dd = static_cast<double>(c.d);
  return std::sqrt((std::sqrt(dd) * p.delta * c.d_psi +
                    4.0 * mid * dd * c.a_q * p.delta * rate) /
                   (2.0 * p.m2));
}

}  // namespace

Schedule make_schedule(Regime regime, const GeometryConstants& constants,
                       const AssumptionParams& params, std::int64_t iterations,
                       TauPolicy tau_policy) {
  if (iterations < 0) throw ConfigError("make_schedule: T must be >= 0");
  if (regime == Regime::ClipExpectation && params.kappa == 1.0)
    throw ConfigError(
        "clip_expectation schedule is undefined at kappa = 1 "
        "(c = 2 kappa D / ((1 - kappa) nu) degenerates); use clip_high_prob");

  Schedule s;
  s.regime = regime;
  s.kappa = params.kappa;
  s.iterations = iterations;
  if (iterations == 0) {
    s.nu = 0.0;
    s.tau = params.tau;
    s.sigma_q = constants.sigma_q;
    if (regime != Regime::RobustExpectation) s.clip_level = 1.0;
    s.provenance = "T = 0: no iterations, placeholder parameters";
    return s;
  }

  const double T = static_cast<double>(iterations);
  const double kap = params.kappa;
  std::ostringstream prov;

  // Resolve tau first; sigma_q's Delta term depends on it.
  double tau;
  switch (tau_policy.kind) {
    case TauPolicy::Kind::Fixed:
      if (tau_policy.value <= 0.0)
        throw ConfigError("fixed tau must be positive");
      tau = tau_policy.value;
      prov << "tau fixed; ";
      break;
    case TauPolicy::Kind::Epsilon:
      if (tau_policy.value <= 0.0)
        throw ConfigError("epsilon for the tau rule must be positive");
      tau = tau_policy.value / params.m2;
      prov << "tau = eps/M2; ";
      break;
    case TauPolicy::Kind::Auto:
    default:
      if (params.delta > 0.0) {
        tau = optimal_tau(regime, constants, params, iterations);
        prov << "tau theorem-optimal (Delta > 0); ";
      } else {
        const double sigma0 = sigma_q_constant(constants.d, constants.q, kap,
                                               params.m2, 0.0, 1.0);
        tau = sigma0 * constants.r0 /
              (params.m2 * std::pow(T, kap / (1.0 + kap)));
        prov << "tau = sigma_q^0 R0/(M2 T^{k/(1+k)}) (Delta = 0); ";
      }
      break;
  }
  s.tau = tau;
  s.sigma_q = sigma_q_constant(constants.d, constants.q, kap, params.m2,
                               params.delta, tau);

  switch (regime) {
    case Regime::RobustExpectation:
      s.nu = std::pow(constants.r0, 1.0 / kap) /
             (s.sigma_q * std::pow(T, 1.0 / (1.0 + kap)));
      prov << "nu = R0^{1/k} sigma_q^{-1} T^{-1/(1+k)}";
      break;
    case Regime::ClipExpectation: {
      s.nu = std::pow(constants.r0 * constants.r0 /
                          (4.0 * T * std::pow(s.sigma_q, 1.0 + kap) *
                           std::pow(constants.d_psi, 1.0 - kap)),
                      1.0 / (1.0 + kap));
      s.clip_level = 2.0 * kap * constants.d_psi / ((1.0 - kap) * s.nu);
      prov << "nu = (R0^2/(4T sigma^{1+k} D^{1-k}))^{1/(1+k)}, "
              "c = 2k D/((1-k) nu)";
      break;
    }
    case Regime::ClipHighProb: {
      const double cc = std::pow(T, 1.0 / (1.0 + kap)) * s.sigma_q;
      s.clip_level = cc;
      s.nu = constants.d_psi / cc;
      prov << "c = T^{1/(1+k)} sigma_q, nu = D_Psi/c";
      break;
    }
  }
  s.provenance = prov.str();
  return s;
}

std::int64_t RestartPlan::total_iterations() const {
  return std::accumulate(stage_iterations.begin(), stage_iterations.end(),
                         std::int64_t{0});
}

Schedule RestartPlan::stage_schedule(int k) const {
  Schedule s;
  s.regime = base_regime;
  s.kappa = kappa;
  s.iterations = stage_iterations.at(k);
  s.tau = stage_tau.at(k);
  s.nu = stage_nu.at(k);
  s.sigma_q = sigma_q;
  if (base_regime != Regime::RobustExpectation)
    s.clip_level = stage_clip.at(k);
  s.provenance = "restart stage " + std::to_string(k + 1);
  return s;
}

RestartPlan make_restart_plan(Regime base_regime,
                              const GeometryConstants& constants,
                              const AssumptionParams& params,
                              const Growth& growth, double epsilon) {
  params.validate();
  if (epsilon <= 0.0) throw ConfigError("restart plan needs epsilon > 0");
  if (growth.mu <= 0.0 || growth.r < 1.0)
    throw ConfigError("restart plan needs r-growth with mu > 0, r >= 1");
  const double kap = params.kappa;
  const double r = growth.r;
  switch (base_regime) {
    case Regime::RobustExpectation:
      if (r < (1.0 + kap) / kap - 1e-12)
        throw ConfigError(
            "robust restarts require r >= (1+kappa)/kappa = " +
            std::to_string((1.0 + kap) / kap));
      break;
    case Regime::ClipExpectation:
      if (r < 2.0)
        throw ConfigError("clip-expectation restarts require r >= 2");
      if (kap == 1.0)
        throw ConfigError("clip_expectation is undefined at kappa = 1");
      break;
    case Regime::ClipHighProb:
      if (r < 1.0) throw ConfigError("restarts require r >= 1");
      break;
  }

  RestartPlan plan;
  plan.base_regime = base_regime;
  plan.kappa = kap;
  plan.epsilon = epsilon;
  plan.growth = growth;
  plan.r0 = constants.d_psi;  // the restart theorems set R0 from the diameter

  // The restart analysis drops the tau-dependent term of sigma_q (it decays
  // a factor T^{-kappa/(1+kappa)} faster), so sigma here is Delta-free.
  plan.sigma_q =
      sigma_q_constant(constants.d, constants.q, kap, params.m2, 0.0, 1.0);

  const double level = growth.mu * std::pow(plan.r0, r) / (2.0 * epsilon);
  const int n = level > 1.0
                    ? static_cast<int>(std::ceil(std::log2(level) / r - 1e-12))
                    : 0;
  plan.restarts = std::max(0, n);

  const double dd = static_cast<double>(constants.d);
  for (int k = 1; k <= plan.restarts; ++k) {
    const double rk = plan.r0 / std::pow(2.0, k);
    const double tk_real =
        std::pow(plan.sigma_q * std::pow(2.0, 1.0 + r) /
                     (growth.mu * std::pow(rk, r - 1.0)),
                 (1.0 + kap) / kap);
    const auto tk = static_cast<std::int64_t>(std::ceil(tk_real));
    const double tau_k =
        plan.sigma_q * rk /
        (params.m2 * std::pow(static_cast<double>(tk), kap / (1.0 + kap)));
    plan.stage_radius.push_back(rk);
    plan.stage_iterations.push_back(tk);
    plan.stage_tau.push_back(tau_k);
    if (base_regime == Regime::RobustExpectation) {
      plan.stage_nu.push_back(
          std::pow(rk, 1.0 / kap) /
          (plan.sigma_q *
           std::pow(static_cast<double>(tk), 1.0 / (1.0 + kap))));
    } else {
      const double ck =
          std::pow(static_cast<double>(tk), 1.0 / (1.0 + kap)) * plan.sigma_q;
      plan.stage_clip.push_back(ck);
      plan.stage_nu.push_back(rk / ck);
    }
    plan.stage_delta_max.push_back(
        growth.mu * growth.mu * std::pow(plan.r0, 2.0 * r - 1.0) /
        (params.m2 * std::sqrt(dd) * std::pow(2.0, k * (2.0 * r - 1.0))));
  }
  std::ostringstream prov;
  prov << "N = ceil(log2(mu R0^r/(2 eps))/r) = " << plan.restarts
       << "; T_k = ceil([sigma 2^{1+r}/(mu R_k^{r-1})]^{(1+k)/k}); "
          "tau_k = sigma R_k/(M2 T_k^{k/(1+k)})";
  plan.provenance = prov.str();
  return plan;
}

}  // namespace zomd
