#pragma once

#include <optional>
#include <string>

#include "zomd/seed_stream.hpp"
#include "zomd/types.hpp"

namespace zomd {

/// Uniform draw from the Euclidean unit sphere S_2^d.
Vec sample_sphere(SeedStream& stream, int d);

/// Uniform draw from the Euclidean unit ball B_2^d (radius via inverse CDF
/// r = U^{1/d}, exact radial density r^{d-1}).
Vec sample_ball(SeedStream& stream, int d);

/// Heavy-tailed linear oracle noise: f(x, xi) = f(x) + <xi, x - x_ref>,
/// xi = R * v with v uniform on the sphere, so E[xi] = 0 exactly and
/// ||xi||_2 = R.
struct StochasticNoiseModel {
  enum class Kind { None, LinearPareto, LinearStudentLike };

  Kind kind = Kind::None;
  double alpha = 0.0;   // Pareto tail index
  double scale = 0.0;
  int dof = 0;          // Student-like degrees of freedom
  Vec x_ref;            // empty means the origin

  static StochasticNoiseModel none() { return {}; }
  static StochasticNoiseModel pareto(double alpha, double scale);
  static StochasticNoiseModel student_like(int dof, double scale);

  /// alpha (or dof) must strictly exceed 1 + kappa or the (1+kappa)-th
  /// moment diverges.
  void validate(double kappa) const;

  /// Radial magnitude R for one realization.
  double sample_radius(SeedStream& stream) const;
  Vec sample(SeedStream& stream, int d) const;

  /// E[R^m]^{1/m}, analytic. Requires m below the tail index.
  double radial_moment(double m) const;

  /// Minkowski bound on E[(M2 + ||xi||)^{1+kappa}]^{1/(1+kappa)}.
  double effective_m2(double base_m2, double kappa) const;

  std::string describe() const;
};

struct MomentReport {
  double moment;     // empirical E[||xi||^{1+kappa}]^{1/(1+kappa)}
  double raw_mean;   // empirical E[||xi||^{1+kappa}]
  double stderr_raw; // standard error of raw_mean
};

/// Monte Carlo (1+kappa)-th moment of ||xi||_2. n_samples >= 1e4.
MomentReport moment_report(const StochasticNoiseModel& model, double kappa,
                           std::int64_t n_samples, int d, SeedStream& stream);

/// Deterministic bounded perturbation |delta(x)| <= Delta added to every
/// oracle answer.
struct AdversarialNoiseModel {
  enum class Kind { None, SignSin, Constant };

  Kind kind = Kind::None;
  double delta = 0.0;     // the bound Delta
  double epsilon0 = 1.0;  // oscillation scale for SignSin
  Vec direction;          // h for SignSin; empty means (1, 1, ..., 1)

  static AdversarialNoiseModel none() { return {}; }
  static AdversarialNoiseModel sign_sin(double delta, double epsilon0,
                                        Vec direction = Vec());
  static AdversarialNoiseModel constant(double delta);

  double operator()(const Vec& x) const;
  void validate() const;
  std::string describe() const;
};

}  // namespace zomd
