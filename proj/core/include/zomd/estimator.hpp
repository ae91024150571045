#pragma once

#include <cstdint>

#include "zomd/oracle.hpp"
#include "zomd/types.hpp"

namespace zomd {

/// One two-point smoothed gradient estimate
///   g = (d / 2 tau) (phi(x + tau e) - phi(x - tau e)) e,
/// kept in rank-one form (lambda, e) so the structure is exact.
struct GradientSample {
  Vec direction;     // e, unit vector
  double lambda;     // (d / 2 tau) (phi_plus - phi_minus)
  double phi_plus;
  double phi_minus;
  double tau;

  Vec gradient() const { return lambda * direction; }
  double norm2() const { return std::abs(lambda); }
  /// ||g||_q = |lambda| ||e||_q.
  double norm(double q) const { return std::abs(lambda) * lp_norm(direction, q); }
};

/// Result of the clipping operator g -> (g / ||g||_q) min(||g||_q, c).
struct ClippedGradient {
  Vec g;
  double clip_level;
  bool was_clipped;
};

/// Draw e, query the oracle at x +- tau e with one shared realization.
GradientSample estimate_gradient(const NoisyOracle& oracle, const Vec& x,
                                 double tau, SeedStream& stream);

/// Clip in the q-norm, q in [2, inf]. Returns the input unchanged (bit for
/// bit) when the norm is already within the level.
ClippedGradient clip(const Vec& g, double c, double q);

struct SmoothedValueEstimate {
  double mean;
  double stderr_mean;
  std::int64_t n;
};

/// Monte Carlo estimate of the smoothed value
/// f_tau(x) = E_{u, xi}[f(x + tau u, xi)], u uniform on the unit ball.
SmoothedValueEstimate estimate_smoothed_value(const NoisyOracle& oracle,
                                              const Vec& x, double tau,
                                              std::int64_t n_samples,
                                              SeedStream& stream);

/// Empirical E[||g||_q^{1+kappa}] over n_samples fresh estimates at x.
double moment_check(const NoisyOracle& oracle, const Vec& x, double tau,
                    double q, double kappa, std::int64_t n_samples,
                    SeedStream& stream);

}  // namespace zomd
