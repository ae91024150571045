#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zomd/constants.hpp"
#include "zomd/problem.hpp"

namespace zomd {

/// Per-run parameter bundle produced by one of the three convergence
/// theorems.
struct Schedule {
  Regime regime = Regime::RobustExpectation;
  double kappa = 1.0;
  double nu = 0.0;     // stepsize
  double tau = 0.0;    // smoothing radius
  double sigma_q = 0.0;  // sigma evaluated at the resolved tau
  std::optional<double> clip_level;  // c, clip regimes only
  std::int64_t iterations = 0;       // T
  std::string provenance;  // which formula produced each value

  double clip() const { return clip_level.value(); }
};

/// How the smoothing radius is resolved before sigma_q is evaluated.
struct TauPolicy {
  enum class Kind { Auto, Epsilon, Fixed };
  Kind kind = Kind::Auto;
  double value = 0.0;  // epsilon or the fixed tau

  static TauPolicy auto_policy() { return {}; }
  static TauPolicy epsilon(double eps) { return {Kind::Epsilon, eps}; }
  static TauPolicy fixed(double tau) { return {Kind::Fixed, tau}; }
};

/// Build the theorem schedule for a regime from precomputed constants.
/// tau resolution order: tau = eps / M2 when epsilon is given; otherwise the
/// theorem's optimal tau (needs Delta > 0); otherwise the restart-style
/// tau = sigma_q^0 R0 / (M2 T^{kappa/(1+kappa)}). sigma_q is re-evaluated at
/// the resolved tau since its Delta term depends on tau.
Schedule make_schedule(Regime regime, const GeometryConstants& constants,
                       const AssumptionParams& params, std::int64_t iterations,
                       TauPolicy tau_policy = TauPolicy::auto_policy());

/// Restart acceleration plan under r-growth.
struct RestartPlan {
  Regime base_regime = Regime::ClipHighProb;
  double kappa = 1.0;
  double epsilon = 0.0;
  Growth growth;
  double r0 = 0.0;       // diameter-based initial radius
  double sigma_q = 0.0;  // Delta-free sigma used by the stage formulas
  int restarts = 0;      // N
  std::vector<std::int64_t> stage_iterations;  // T_k, k = 1..N
  std::vector<double> stage_tau;               // tau_k
  std::vector<double> stage_nu;                // nu_k
  std::vector<double> stage_clip;              // c_k (clip regimes)
  std::vector<double> stage_radius;            // R_k = R0 / 2^k
  std::vector<double> stage_delta_max;         // admissible Delta_k
  std::string provenance;

  std::int64_t total_iterations() const;
  Schedule stage_schedule(int k) const;  // k in [0, restarts)
};

/// Stage sequences of the restart theorems. R0 is the diameter constant of
/// the regime (constants.d_psi).
RestartPlan make_restart_plan(Regime base_regime,
                              const GeometryConstants& constants,
                              const AssumptionParams& params,
                              const Growth& growth, double epsilon);

}  // namespace zomd
