#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "zomd/feasible_set.hpp"
#include "zomd/types.hpp"

namespace zomd {

/// r-growth certificate: (mu_r / 2) ||x - x*||_p^r <= f(x) - f*.
struct Growth {
  double r = 1.0;
  double mu = 0.0;
  double p = 2.0;  // norm the certificate is stated in
};

/// A synthetic convex objective with known minimizer, optimal value and
/// Lipschitz constant, over a compact feasible set.
struct ProblemSpec {
  std::string name;
  int d = 0;
  std::function<double(const Vec&)> objective;
  Vec x_star;
  double f_star = 0.0;
  double m2 = 0.0;  // l2-Lipschitz constant of the deterministic part
  std::optional<Growth> growth;
  FeasibleSet set = FeasibleSet::l2_ball(1, 1.0);

  double value(const Vec& x) const { return objective(x); }
};

/// f(x) - f*; x must be feasible.
double suboptimality(const ProblemSpec& problem, const Vec& x);

// Built-in problem families.

/// f(x) = m2 ||x - x*||_2, sharp minimum (r = 1 growth, mu = 2 m2).
ProblemSpec make_sharp_norm(FeasibleSet set, Vec x_star, double m2 = 1.0);

/// f(x) = 0.5 ||x - x*||_2^2 (r = 2 growth, mu = 1); Lipschitz over the
/// tau-enlarged set, m2 supplied by the caller or bounded from the geometry.
ProblemSpec make_quadratic(FeasibleSet set, Vec x_star,
                           double lipschitz_radius = 0.0);

/// f(x) = sum_i w+ (x_i - x*_i)_+ + w- (x*_i - x_i)_+, an asymmetric sharp
/// cone whose ball-smoothed minimizer is displaced by a fixed fraction of
/// the smoothing radius.
ProblemSpec make_asym_abs(FeasibleSet set, Vec x_star, double w_plus,
                          double w_minus);

/// f(x) = <a, x> restricted to the set (x* is the set-dependent minimizer;
/// supported for l2_ball, box and simplex).
ProblemSpec make_linear(FeasibleSet set, Vec a);

/// f(x) = max_i (<a_i, x> + b_i); x* and f* supplied by the caller.
ProblemSpec make_max_linear(FeasibleSet set, std::vector<Vec> rows, Vec offsets,
                            Vec x_star);

/// f(x) = value everywhere.
ProblemSpec make_constant(FeasibleSet set, double value);

}  // namespace zomd
