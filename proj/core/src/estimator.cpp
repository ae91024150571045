#include "zomd/estimator.hpp"

#include <cmath>

#include "zomd/noise.hpp"

namespace zomd {

GradientSample estimate_gradient(const NoisyOracle& oracle, const Vec& x,
                                 double tau, SeedStream& stream) {
  if (tau <= 0.0) throw DomainError("estimate_gradient: tau must be positive");
  const int d = oracle.problem().d;
  GradientSample s;
  s.direction = sample_sphere(stream, d);
  s.tau = tau;
  const auto [fp, fm] =
      oracle.evaluate_pair(x + tau * s.direction, x - tau * s.direction,
                           stream);
  s.phi_plus = fp;
  s.phi_minus = fm;
  s.lambda = (static_cast<double>(d) / (2.0 * tau)) * (fp - fm);
  return s;
}

ClippedGradient clip(const Vec& g, double c, double q) {
  if (c <= 0.0) throw DomainError("clip: level must be positive");
  if (q < 2.0 && !std::isinf(q))
    throw DomainError("clip: q must lie in [2, inf]");
  ClippedGradient out;
  out.clip_level = c;
  const double n = lp_norm(g, q);
  if (n <= c) {
    out.g = g;
    out.was_clipped = false;
  } else {
    out.g = g * (c / n);
    out.was_clipped = true;
  }
  return out;
}

SmoothedValueEstimate estimate_smoothed_value(const NoisyOracle& oracle,
                                              const Vec& x, double tau,
                                              std::int64_t n_samples,
                                              SeedStream& stream) {
  if (n_samples < 1)
    throw DomainError("estimate_smoothed_value: n_samples must be >= 1");
  const int d = oracle.problem().d;
  double mean = 0.0, m2 = 0.0;
  for (std::int64_t i = 0; i < n_samples; ++i) {
    const Vec u = sample_ball(stream, d);
    const double v = oracle.evaluate_single(x + tau * u, stream);
    const double delta = v - mean;
    mean += delta / static_cast<double>(i + 1);
    m2 += delta * (v - mean);
  }
  SmoothedValueEstimate e;
  e.mean = mean;
  e.n = n_samples;
  const double var =
      n_samples > 1 ? m2 / static_cast<double>(n_samples - 1) : 0.0;
  e.stderr_mean = std::sqrt(var / static_cast<double>(n_samples));
  return e;
}

double moment_check(const NoisyOracle& oracle, const Vec& x, double tau,
                    double q, double kappa, std::int64_t n_samples,
                    SeedStream& stream) {
  if (n_samples < 10000)
    throw DomainError("moment_check: n_samples must be >= 1e4");
  double mean = 0.0;
  for (std::int64_t i = 0; i < n_samples; ++i) {
    const GradientSample s = estimate_gradient(oracle, x, tau, stream);
    mean += (std::pow(s.norm(q), 1.0 + kappa) - mean) /
            static_cast<double>(i + 1);
  }
  return mean;
}

}  // namespace zomd
