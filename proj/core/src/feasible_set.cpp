#include "zomd/feasible_set.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <vector>

namespace zomd {

FeasibleSet FeasibleSet::l2_ball(int d, double radius, Vec center) {
  if (d < 1 || radius <= 0.0) throw ConfigError("l2_ball: need d >= 1, radius > 0");
  FeasibleSet s;
  s.kind_ = Kind::L2Ball;
  s.dim_ = d;
  s.radius_ = radius;
  s.center_ = center.size() ? std::move(center) : Vec::Zero(d);
  if (s.center_.size() != d) throw ConfigError("l2_ball: center dimension mismatch");
  return s;
}

FeasibleSet FeasibleSet::box(Vec lower, Vec upper) {
  if (lower.size() == 0 || lower.size() != upper.size())
    throw ConfigError("box: bounds dimension mismatch");
  if (((upper - lower).array() < 0.0).any())
    throw ConfigError("box: upper must dominate lower");
  FeasibleSet s;
  s.kind_ = Kind::Box;
  s.dim_ = static_cast<int>(lower.size());
  s.lower_ = std::move(lower);
  s.upper_ = std::move(upper);
  return s;
}

FeasibleSet FeasibleSet::simplex(int d) {
  if (d < 1) throw ConfigError("simplex: need d >= 1");
  FeasibleSet s;
  s.kind_ = Kind::Simplex;
  s.dim_ = d;
  return s;
}

FeasibleSet FeasibleSet::l1_ball(int d, double radius, Vec center) {
  if (d < 1 || radius <= 0.0) throw ConfigError("l1_ball: need d >= 1, radius > 0");
  FeasibleSet s;
  s.kind_ = Kind::L1Ball;
  s.dim_ = d;
  s.radius_ = radius;
  s.center_ = center.size() ? std::move(center) : Vec::Zero(d);
  if (s.center_.size() != d) throw ConfigError("l1_ball: center dimension mismatch");
  return s;
}

FeasibleSet FeasibleSet::lp_ball(int d, double p, double radius) {
  if (d < 1 || radius <= 0.0) throw ConfigError("lp_ball: need d >= 1, radius > 0");
  if (p <= 1.0 || p > 2.0) throw ConfigError("lp_ball: p must lie in (1, 2]");
  FeasibleSet s;
  s.kind_ = Kind::LpBall;
  s.dim_ = d;
  s.p_ = p;
  s.radius_ = radius;
  s.center_ = Vec::Zero(d);
  return s;
}

bool FeasibleSet::contains(const Vec& x, double tol) const {
  if (x.size() != dim_) return false;
  switch (kind_) {
    case Kind::L2Ball:
      return (x - center_).norm() <= radius_ + tol;
    case Kind::Box:
      return ((x - lower_).array() >= -tol).all() &&
             ((upper_ - x).array() >= -tol).all();
    case Kind::Simplex:
      return (x.array() >= -tol).all() && std::abs(x.sum() - 1.0) <= tol;
    case Kind::L1Ball:
      return lp_norm(x - center_, 1.0) <= radius_ + tol;
    case Kind::LpBall:
      return lp_norm(x - center_, p_) <= radius_ + tol;
  }
  return false;
}

double FeasibleSet::distance_upper(const Vec& x) const {
  if (contains(x)) return 0.0;
  switch (kind_) {
    case Kind::L2Ball:
      return (x - center_).norm() - radius_;
    case Kind::Box:
    case Kind::Simplex:
    case Kind::L1Ball:
      return (x - project_l2(x)).norm();
    case Kind::LpBall: {
      const Vec z = x - center_;
      const double n = lp_norm(z, p_);
      return (z - (radius_ / n) * z).norm();
    }
  }
  return 0.0;
}

bool FeasibleSet::within_enlarged(const Vec& x, double tol) const {
  return distance_upper(x) <= tau_margin_ + tol;
}

Vec project_simplex(const Vec& y, double z) {
  const Eigen::Index d = y.size();
  std::vector<double> u(y.data(), y.data() + d);
  std::sort(u.begin(), u.end(), std::greater<double>());
  double cssv = 0.0, theta = 0.0;
  int rho = 0;
  for (Eigen::Index j = 0; j < d; ++j) {
    cssv += u[j];
    const double t = (cssv - z) / static_cast<double>(j + 1);
    if (u[j] - t > 0.0) {
      rho = static_cast<int>(j + 1);
      theta = t;
    }
  }
  (void)rho;
  return (y.array() - theta).cwiseMax(0.0).matrix();
}

Vec FeasibleSet::project_l2(const Vec& y) const {
  if (y.size() != dim_)
    throw DomainError("project_l2: dimension mismatch at " + format_point(y));
  switch (kind_) {
    case Kind::L2Ball: {
      const Vec z = y - center_;
      const double n = z.norm();
      if (n <= radius_) return y;
      return center_ + (radius_ / n) * z;
    }
    case Kind::Box:
      return y.cwiseMax(lower_).cwiseMin(upper_);
    case Kind::Simplex:
      return project_simplex(y, 1.0);
    case Kind::L1Ball: {
      const Vec z = y - center_;
      if (lp_norm(z, 1.0) <= radius_) return y;
      const Vec a = z.cwiseAbs();
      const Vec w = project_simplex(a, radius_);
      Vec out(dim_);
      for (Eigen::Index i = 0; i < dim_; ++i)
        out[i] = center_[i] + (z[i] < 0.0 ? -w[i] : w[i]);
      return out;
    }
    case Kind::LpBall:
      throw ConfigError(
          "project_l2: no exact Euclidean projection for lp_ball(p=" +
          std::to_string(p_) + ")");
  }
  throw ConfigError("project_l2: unknown set kind");
}

double FeasibleSet::euclidean_diameter() const {
  switch (kind_) {
    case Kind::L2Ball:
      return 2.0 * radius_;
    case Kind::Box:
      return (upper_ - lower_).norm();
    case Kind::Simplex:
      return std::sqrt(2.0);
    case Kind::L1Ball:
      return 2.0 * radius_;
    case Kind::LpBall:
      return 2.0 * radius_;  // attained on a coordinate axis for p <= 2
  }
  return 0.0;
}

Vec FeasibleSet::any_point() const {
  switch (kind_) {
    case Kind::L2Ball:
    case Kind::L1Ball:
    case Kind::LpBall:
      return center_;
    case Kind::Box:
      return 0.5 * (lower_ + upper_);
    case Kind::Simplex:
      return Vec::Constant(dim_, 1.0 / static_cast<double>(dim_));
  }
  return Vec::Zero(dim_);
}

std::string FeasibleSet::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::L2Ball:
      os << "l2_ball(r=" << radius_ << ")";
      break;
    case Kind::Box:
      os << "box(d=" << dim_ << ")";
      break;
    case Kind::Simplex:
      os << "simplex(d=" << dim_ << ")";
      break;
    case Kind::L1Ball:
      os << "l1_ball(r=" << radius_ << ")";
      break;
    case Kind::LpBall:
      os << "lp_ball(p=" << p_ << ", r=" << radius_ << ")";
      break;
  }
  return os.str();
}

}  // namespace zomd
