#pragma once

#include <optional>
#include <string>

#include "zomd/feasible_set.hpp"
#include "zomd/oracle.hpp"
#include "zomd/prox.hpp"
#include "zomd/types.hpp"

namespace zomd {

/// Which theorem's parameter formulas a schedule follows.
enum class Regime { RobustExpectation, ClipExpectation, ClipHighProb };

std::string regime_name(Regime r);
Regime regime_from_name(const std::string& name);

/// a_q = d^{1/q - 1/2} min{ sqrt(32 ln d - 8), sqrt(2q - 1) }.
/// The log branch needs d >= 2; below that the sqrt(2q - 1) branch is used.
double a_q_constant(int d, double q);

/// K_q = 10 max{1, (q - 1)^{(1+kappa)/2}} (finite q only).
double k_q_constant(double q, double kappa);

/// sigma_q^{1+kappa} = 2^k (sqrt(d) a_q M2 / 2^{1/4})^{1+k}
///                   + 2^k (d a_q Delta / tau)^{1+k}; returns sigma_q.
double sigma_q_constant(int d, double q, double kappa, double m2, double delta,
                        double tau);

/// The closed-form constants every schedule needs.
struct GeometryConstants {
  int d = 0;
  double q = 2.0;
  double kappa = 1.0;
  double a_q = 0.0;
  double k_q = 0.0;
  double sigma_q = 0.0;
  double sup_bregman = 0.0;  // sup_{x,y in X} D_Psi(x, y)
  double d_psi = 0.0;        // regime-exponent diameter
  double r0 = 0.0;           // regime-exponent initial radius
  Regime regime = Regime::RobustExpectation;
};

/// Evaluate all constants for a (setup, set, params, regime) combination.
/// r0 comes from D_Psi(x*, x0) with the regime exponent; when x* is not
/// given, r0 falls back to the diameter d_psi.
GeometryConstants compute_constants(const ProxSetup& setup,
                                    const FeasibleSet& set,
                                    const AssumptionParams& params,
                                    Regime regime, const Vec& x0,
                                    const std::optional<Vec>& x_star);

}  // namespace zomd
