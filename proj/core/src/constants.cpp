#include "zomd/constants.hpp"

#include <cmath>

namespace zomd {

std::string regime_name(Regime r) {
  switch (r) {
    case Regime::RobustExpectation:
      return "robust_expectation";
    case Regime::ClipExpectation:
      return "clip_expectation";
    case Regime::ClipHighProb:
      return "clip_high_prob";
  }
  return "?";
}

Regime regime_from_name(const std::string& name) {
  if (name == "robust_expectation") return Regime::RobustExpectation;
  if (name == "clip_expectation") return Regime::ClipExpectation;
  if (name == "clip_high_prob") return Regime::ClipHighProb;
  throw ConfigError("unknown regime: " + name);
}

double a_q_constant(int d, double q) {
  if (d < 1) throw ConfigError("a_q: d must be >= 1");
  if (q < 2.0) throw ConfigError("a_q: stated for q >= 2");
  const double dd = static_cast<double>(d);
  const double log_term = 32.0 * std::log(dd) - 8.0;
  const bool log_ok = d >= 2 && log_term > 0.0;
  const bool q_finite = !std::isinf(q);
  double root;
  if (log_ok && q_finite) {
    root = std::sqrt(std::min(log_term, 2.0 * q - 1.0));
  } else if (log_ok) {
    root = std::sqrt(log_term);
  } else if (q_finite) {
    root = std::sqrt(2.0 * q - 1.0);
  } else {
    return 1.0;  // d = 1, q = inf: ||e||_inf = 1 exactly
  }
  const double inv_q = q_finite ? 1.0 / q : 0.0;
  return std::pow(dd, inv_q - 0.5) * root;
}

double k_q_constant(double q, double kappa) {
  if (std::isinf(q))
    throw ConfigError("K_q is unbounded at q = inf");
  return 10.0 * std::max(1.0, std::pow(q - 1.0, (1.0 + kappa) / 2.0));
}

double sigma_q_constant(int d, double q, double kappa, double m2, double delta,
                        double tau) {
  const double a = a_q_constant(d, q);
  const double dd = static_cast<double>(d);
  const double e = 1.0 + kappa;
  double s = std::pow(2.0, kappa) *
             std::pow(std::sqrt(dd) * a * m2 / std::pow(2.0, 0.25), e);
  if (delta > 0.0) {
    if (tau <= 0.0)
      throw ConfigError("sigma_q: positive Delta needs positive tau");
    s += std::pow(2.0, kappa) * std::pow(dd * a * delta / tau, e);
  }
  return std::pow(s, 1.0 / e);
}

GeometryConstants compute_constants(const ProxSetup& setup,
                                    const FeasibleSet& set,
                                    const AssumptionParams& params,
                                    Regime regime, const Vec& x0,
                                    const std::optional<Vec>& x_star) {
  params.validate();
  check_supported_pair(setup, set);
  GeometryConstants c;
  c.d = set.dim();
  c.q = setup.q();
  c.kappa = params.kappa;
  c.regime = regime;
  c.a_q = a_q_constant(c.d, c.q);
  c.k_q = std::isinf(c.q) ? 0.0 : k_q_constant(c.q, params.kappa);
  c.sigma_q = sigma_q_constant(c.d, c.q, params.kappa, params.m2, params.delta,
                               params.tau);
  c.sup_bregman = bregman_diameter_sup(setup, set);

  const double e = (1.0 + params.kappa) / params.kappa;
  if (regime == Regime::RobustExpectation) {
    c.d_psi = std::pow(e * c.sup_bregman, 1.0 / e);
  } else {
    c.d_psi = std::sqrt(2.0 * c.sup_bregman);
  }
  if (x_star.has_value()) {
    const double d0 = setup.bregman(*x_star, x0);
    c.r0 = (regime == Regime::RobustExpectation)
               ? std::pow(e * d0, 1.0 / e)
               : std::sqrt(2.0 * d0);
    // x0 = argmin Psi over X, so D(x*, x0) <= sup D; guard against rounding
    c.r0 = std::min(c.r0, c.d_psi);
  } else {
    c.r0 = c.d_psi;
  }
  return c;
}

}  // namespace zomd
