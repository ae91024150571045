#pragma once

#include <string>
#include <utility>

#include "zomd/feasible_set.hpp"
#include "zomd/types.hpp"

namespace zomd {

/// Mirror geometry: a prox-function Psi with its gradient, conjugate
/// gradient, Bregman divergence and a uniform-convexity certificate.
///
/// Ball:    Psi(x) = 0.5 ||x||_2^2                      (p = 2)
/// Entropy: Psi(x) = (1+g) sum (x_i + g/d) log(x_i + g/d)   (p = 1)
/// Lp:      Psi(x) = K_q^{1/kappa} (kappa/(1+kappa)) ||x||_p^{(1+kappa)/kappa}
class ProxSetup {
 public:
  enum class Kind { Ball, Entropy, UniformlyConvexLp };

  static ProxSetup ball();
  static ProxSetup entropy(double gamma = 0.0, int d = 0);
  static ProxSetup uniformly_convex_lp(double p, double kappa);

  Kind kind() const { return kind_; }
  double p() const { return p_; }
  double q() const { return q_; }  // dual exponent
  double gamma() const { return gamma_; }
  double kappa() const { return kappa_; }
  int entropy_dim() const { return entropy_dim_; }
  /// Multiplier K_q^{1/kappa} for the Lp kind (1 otherwise).
  double scale() const { return scale_; }

  double psi(const Vec& x) const;
  Vec grad_psi(const Vec& x) const;
  Vec grad_psi_star(const Vec& z) const;
  double bregman(const Vec& y, const Vec& x) const;

  /// (K, r) such that Psi is (K, r)-uniformly convex w.r.t. the p-norm.
  std::pair<double, double> convexity_certificate() const;
  /// True when the certificate gives 1-strong convexity (r == 2, K >= 1).
  bool strongly_convex() const;
  /// True when the certificate matches (1, (1+kappa)/kappa) for this kappa.
  bool certifies_uniform_convexity(double kappa) const;

  std::string describe() const;

 private:
  ProxSetup() = default;

  Kind kind_ = Kind::Ball;
  double p_ = 2.0;
  double q_ = 2.0;
  double gamma_ = 0.0;
  double kappa_ = 1.0;
  double scale_ = 1.0;
  int entropy_dim_ = 0;
};

/// argmin over the set of D_Psi(x, y). Supported pairs:
///   Ball    x {L2Ball, Box, Simplex, L1Ball}   (exact Euclidean forms)
///   Entropy x {Simplex}                        (closed form / bisection)
///   Lp      x {LpBall with matching p, centered at the origin} (radial)
Vec bregman_project(const ProxSetup& setup, const FeasibleSet& set,
                    const Vec& y);

/// One mirror-descent update from x with the already-scaled dual step
/// (nu * g): project(grad_psi_star(grad_psi(x) - step)). The Entropy kind
/// goes through a log-space path that is algebraically identical but safe
/// for very large steps.
Vec mirror_step(const ProxSetup& setup, const FeasibleSet& set, const Vec& x,
                const Vec& scaled_step);

/// argmin over the set of Psi (the canonical start point).
Vec min_point(const ProxSetup& setup, const FeasibleSet& set);

/// sup over x, y in the set of D_Psi(x, y), in closed form. For Entropy with
/// gamma = 0 the pairwise sup diverges; the value anchored at the uniform
/// start point, ln d, is used instead.
double bregman_diameter_sup(const ProxSetup& setup, const FeasibleSet& set);

void check_supported_pair(const ProxSetup& setup, const FeasibleSet& set);

}  // namespace zomd
