#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <string>

namespace zomd {

using Vec = Eigen::VectorXd;

/// A point or parameter is outside the domain an operation is defined on.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// A combination of configuration choices is rejected (unsupported pair,
/// violated assumption, regime mismatch).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// q-exponent value standing in for infinity (max-norm).
inline constexpr double kInfExponent = std::numeric_limits<double>::infinity();

/// ||v||_p for p in [1, inf]. Scaled to avoid overflow for large p.
double lp_norm(const Vec& v, double p);

/// Dual exponent: 1/p + 1/q = 1. p=1 -> inf, p=inf -> 1.
double dual_exponent(double p);

std::string format_point(const Vec& v, int max_coords = 8);

}  // namespace zomd
