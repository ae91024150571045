#pragma once

#include <limits>
#include <string>

#include "zomd/types.hpp"

namespace zomd {

/// Compact convex feasible set. Membership, Euclidean projection (for the
/// kinds with an exact one) and the enlarged-set check live here; Bregman
/// projections live with the prox setups.
class FeasibleSet {
 public:
  enum class Kind { L2Ball, Box, Simplex, L1Ball, LpBall };

  static FeasibleSet l2_ball(int d, double radius, Vec center = Vec());
  static FeasibleSet box(Vec lower, Vec upper);
  static FeasibleSet simplex(int d);
  static FeasibleSet l1_ball(int d, double radius, Vec center = Vec());
  static FeasibleSet lp_ball(int d, double p, double radius);

  Kind kind() const { return kind_; }
  int dim() const { return dim_; }
  double radius() const { return radius_; }
  double p() const { return p_; }
  const Vec& center() const { return center_; }
  const Vec& lower() const { return lower_; }
  const Vec& upper() const { return upper_; }

  /// Enlargement margin of X_tau; infinite by default since the synthetic
  /// objectives are defined everywhere.
  double tau_margin() const { return tau_margin_; }
  void set_tau_margin(double m) { tau_margin_ = m; }

  bool contains(const Vec& x, double tol = 1e-9) const;
  /// Upper bound on the Euclidean distance to the set (exact for every kind
  /// except LpBall, where radial scaling gives a valid over-estimate).
  double distance_upper(const Vec& x) const;
  bool within_enlarged(const Vec& x, double tol = 1e-12) const;

  /// Exact Euclidean projection. Unsupported for LpBall with p not in {1, 2}.
  Vec project_l2(const Vec& y) const;

  /// sup over x, y in the set of ||x - y||_2.
  double euclidean_diameter() const;

  /// Some feasible point (center, box midpoint, uniform simplex weight).
  Vec any_point() const;

  std::string describe() const;

 private:
  FeasibleSet() = default;

  Kind kind_ = Kind::L2Ball;
  int dim_ = 0;
  double radius_ = 0.0;
  double p_ = 2.0;
  Vec center_, lower_, upper_;
  double tau_margin_ = std::numeric_limits<double>::infinity();
};

/// Euclidean projection onto the canonical simplex {x >= 0, sum x = z}.
Vec project_simplex(const Vec& y, double z = 1.0);

}  // namespace zomd
