#include "zomd/prox.hpp"

#include <cmath>
#include <sstream>

#include "zomd/constants.hpp"

namespace zomd {

namespace {

double xlogx(double t) { return t > 0.0 ? t * std::log(t) : 0.0; }

}  // namespace

ProxSetup ProxSetup::ball() {
  ProxSetup s;
  s.kind_ = Kind::Ball;
  s.p_ = 2.0;
  s.q_ = 2.0;
  s.kappa_ = 1.0;
  return s;
}

ProxSetup ProxSetup::entropy(double gamma, int d) {
  if (gamma < 0.0) throw ConfigError("entropy: gamma must be >= 0");
  if (gamma > 0.0 && d < 1)
    throw ConfigError("entropy: gamma > 0 needs the dimension");
  ProxSetup s;
  s.kind_ = Kind::Entropy;
  s.p_ = 1.0;
  s.q_ = kInfExponent;
  s.gamma_ = gamma;
  s.entropy_dim_ = d;
  s.kappa_ = 1.0;
  return s;
}

ProxSetup ProxSetup::uniformly_convex_lp(double p, double kappa) {
  if (p <= 1.0 || p > 2.0)
    throw ConfigError("uniformly_convex_lp: p must lie in (1, 2]");
  if (!(kappa > 0.0 && kappa <= 1.0))
    throw ConfigError("uniformly_convex_lp: kappa must lie in (0, 1]");
  ProxSetup s;
  s.kind_ = Kind::UniformlyConvexLp;
  s.p_ = p;
  s.q_ = dual_exponent(p);
  s.kappa_ = kappa;
  s.scale_ = std::pow(k_q_constant(s.q_, kappa), 1.0 / kappa);
  return s;
}

double ProxSetup::psi(const Vec& x) const {
  switch (kind_) {
    case Kind::Ball:
      return 0.5 * x.squaredNorm();
    case Kind::Entropy: {
      const double shift = gamma_ > 0.0 ? gamma_ / x.size() : 0.0;
      double acc = 0.0;
      for (Eigen::Index i = 0; i < x.size(); ++i) {
        const double t = x[i] + shift;
        if (t < 0.0)
          throw DomainError("entropy psi: negative shifted coordinate at " +
                            format_point(x));
        acc += xlogx(t);
      }
      return (1.0 + gamma_) * acc;
    }
    case Kind::UniformlyConvexLp: {
      const double s = (1.0 + kappa_) / kappa_;
      return scale_ * (1.0 / s) * std::pow(lp_norm(x, p_), s);
    }
  }
  return 0.0;
}

Vec ProxSetup::grad_psi(const Vec& x) const {
  switch (kind_) {
    case Kind::Ball:
      return x;
    case Kind::Entropy: {
      const double shift = gamma_ > 0.0 ? gamma_ / x.size() : 0.0;
      Vec g(x.size());
      for (Eigen::Index i = 0; i < x.size(); ++i) {
        const double t = x[i] + shift;
        if (t <= 0.0)
          throw DomainError("entropy grad: non-positive shifted coordinate " +
                            std::to_string(t) + " at " + format_point(x));
        g[i] = (1.0 + gamma_) * (std::log(t) + 1.0);
      }
      return g;
    }
    case Kind::UniformlyConvexLp: {
      const double n = lp_norm(x, p_);
      if (n == 0.0) return Vec::Zero(x.size());
      const double s = (1.0 + kappa_) / kappa_;
      const double factor = scale_ * std::pow(n, s - 1.0);
      Vec g(x.size());
      for (Eigen::Index i = 0; i < x.size(); ++i) {
        const double a = std::abs(x[i]) / n;
        g[i] = factor * std::copysign(std::pow(a, p_ - 1.0), x[i]);
      }
      return g;
    }
  }
  return Vec();
}

Vec ProxSetup::grad_psi_star(const Vec& z) const {
  switch (kind_) {
    case Kind::Ball:
      return z;
    case Kind::Entropy: {
      const double shift = gamma_ > 0.0 ? gamma_ / z.size() : 0.0;
      Vec x(z.size());
      for (Eigen::Index i = 0; i < z.size(); ++i)
        x[i] = std::exp(z[i] / (1.0 + gamma_) - 1.0) - shift;
      return x;
    }
    case Kind::UniformlyConvexLp: {
      // conjugate of a (1/s)||.||_p^s is a^{1-s'} (1/s')||.||_q^{s'},
      // s' = 1 + kappa
      const double n = lp_norm(z, q_);
      if (n == 0.0) return Vec::Zero(z.size());
      const double factor = std::pow(scale_, -kappa_) * std::pow(n, kappa_);
      Vec x(z.size());
      for (Eigen::Index i = 0; i < z.size(); ++i) {
        const double a = std::abs(z[i]) / n;
        x[i] = factor * std::copysign(std::pow(a, q_ - 1.0), z[i]);
      }
      return x;
    }
  }
  return Vec();
}

double ProxSetup::bregman(const Vec& y, const Vec& x) const {
  return psi(y) - psi(x) - grad_psi(x).dot(y - x);
}

std::pair<double, double> ProxSetup::convexity_certificate() const {
  switch (kind_) {
    case Kind::Ball:
      return {1.0, 2.0};
    case Kind::Entropy:
      // 1-strong convexity w.r.t. l1 on the simplex for any gamma >= 0
      return {1.0, 2.0};
    case Kind::UniformlyConvexLp:
      return {1.0, (1.0 + kappa_) / kappa_};
  }
  return {0.0, 0.0};
}

bool ProxSetup::strongly_convex() const {
  auto [k, r] = convexity_certificate();
  return r == 2.0 && k >= 1.0;
}

bool ProxSetup::certifies_uniform_convexity(double kappa) const {
  auto [k, r] = convexity_certificate();
  return k >= 1.0 && std::abs(r - (1.0 + kappa) / kappa) < 1e-12;
}

std::string ProxSetup::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::Ball:
      os << "ball";
      break;
    case Kind::Entropy:
      os << "entropy(gamma=" << gamma_ << ")";
      break;
    case Kind::UniformlyConvexLp:
      os << "lp(p=" << p_ << ", kappa=" << kappa_ << ")";
      break;
  }
  return os.str();
}

void check_supported_pair(const ProxSetup& setup, const FeasibleSet& set) {
  using SK = FeasibleSet::Kind;
  switch (setup.kind()) {
    case ProxSetup::Kind::Ball:
      if (set.kind() == SK::L2Ball || set.kind() == SK::Box ||
          set.kind() == SK::Simplex || set.kind() == SK::L1Ball)
        return;
      break;
    case ProxSetup::Kind::Entropy:
      if (set.kind() == SK::Simplex) return;
      break;
    case ProxSetup::Kind::UniformlyConvexLp:
      if (set.kind() == SK::LpBall && set.p() == setup.p() &&
          set.center().isZero(0.0))
        return;
      if (set.kind() == SK::L2Ball && setup.p() == 2.0 &&
          set.center().isZero(0.0))
        return;
      break;
  }
  throw ConfigError("unsupported (setup, set) pair: " + setup.describe() +
                    " with " + set.describe());
}

namespace {

// Bisection for the entropy projection with gamma > 0: find m such that
// sum_i max(0, exp(l_i + m) - shift) = 1, monotone increasing in m.
Vec entropy_project_log(const Vec& log_shifted, double gamma, double tol) {
  const Eigen::Index d = log_shifted.size();
  const double shift = gamma / static_cast<double>(d);
  const double lmax = log_shifted.maxCoeff();
  auto total = [&](double m) {
    double acc = 0.0;
    for (Eigen::Index i = 0; i < d; ++i) {
      const double e = log_shifted[i] + m;
      acc += std::max(0.0, (e > 700.0 ? std::exp(700.0) : std::exp(e)) - shift);
    }
    return acc;
  };
  double lo = std::log(shift > 0.0 ? shift : 1e-300) - lmax;
  double hi = std::log1p(shift) - lmax;  // one coordinate already reaches 1
  while (total(lo) > 1.0) lo -= 1.0;
  while (total(hi) < 1.0) hi += 1.0;
  for (int it = 0; it < 200 && hi - lo > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    (total(mid) < 1.0 ? lo : hi) = mid;
  }
  const double m = 0.5 * (lo + hi);
  Vec x(d);
  for (Eigen::Index i = 0; i < d; ++i)
    x[i] = std::max(0.0, std::exp(log_shifted[i] + m) - shift);
  return x;
}

Vec entropy_project(const ProxSetup& setup, const Vec& y) {
  const Eigen::Index d = y.size();
  const double gamma = setup.gamma();
  const double shift = gamma > 0.0 ? gamma / static_cast<double>(d) : 0.0;
  Vec log_shifted(d);
  for (Eigen::Index i = 0; i < d; ++i) {
    const double t = y[i] + shift;
    if (t <= 0.0)
      throw DomainError("entropy projection: point outside domain " +
                        format_point(y));
    log_shifted[i] = std::log(t);
  }
  if (gamma == 0.0) {
    // closed-form multiplicative normalization
    const double lmax = log_shifted.maxCoeff();
    Vec w = (log_shifted.array() - lmax).exp().matrix();
    return w / w.sum();
  }
  return entropy_project_log(log_shifted, gamma, 1e-12);
}

Vec radial_project(double p, double radius, const Vec& y) {
  const double n = lp_norm(y, p);
  if (n <= radius) return y;
  return (radius / n) * y;
}

}  // namespace

Vec bregman_project(const ProxSetup& setup, const FeasibleSet& set,
                    const Vec& y) {
  check_supported_pair(setup, set);
  switch (setup.kind()) {
    case ProxSetup::Kind::Ball:
      return set.project_l2(y);
    case ProxSetup::Kind::Entropy: {
      if (set.contains(y)) return y;
      return entropy_project(setup, y);
    }
    case ProxSetup::Kind::UniformlyConvexLp:
      return radial_project(set.kind() == FeasibleSet::Kind::L2Ball ? 2.0
                                                                    : set.p(),
                            set.radius(), y);
  }
  throw ConfigError("bregman_project: unknown setup kind");
}

Vec mirror_step(const ProxSetup& setup, const FeasibleSet& set, const Vec& x,
                const Vec& scaled_step) {
  check_supported_pair(setup, set);
  switch (setup.kind()) {
    case ProxSetup::Kind::Ball:
      // reduces exactly to the projected subgradient step
      return set.project_l2(x - scaled_step);
    case ProxSetup::Kind::Entropy: {
      const Eigen::Index d = x.size();
      const double gamma = setup.gamma();
      const double shift = gamma > 0.0 ? gamma / static_cast<double>(d) : 0.0;
      // log(x_i + shift) - step_i / (1 + gamma), the dual move in log space
      Vec log_shifted(d);
      for (Eigen::Index i = 0; i < d; ++i) {
        const double t = x[i] + shift;
        log_shifted[i] = (t > 0.0 ? std::log(t)
                                  : -std::numeric_limits<double>::infinity()) -
                         scaled_step[i] / (1.0 + gamma);
      }
      if (gamma == 0.0) {
        const double lmax = log_shifted.maxCoeff();
        Vec w = (log_shifted.array() - lmax).exp().matrix();
        return w / w.sum();
      }
      return entropy_project_log(log_shifted, gamma, 1e-12);
    }
    case ProxSetup::Kind::UniformlyConvexLp: {
      const Vec z = grad_psi(x) - scaled_step;
      return bregman_project(setup, set, grad_psi_star(z));
    }
  }
  throw ConfigError("mirror_step: unknown setup kind");
}

Vec min_point(const ProxSetup& setup, const FeasibleSet& set) {
  check_supported_pair(setup, set);
  switch (setup.kind()) {
    case ProxSetup::Kind::Ball:
      return set.project_l2(Vec::Zero(set.dim()));
    case ProxSetup::Kind::Entropy:
      return Vec::Constant(set.dim(), 1.0 / static_cast<double>(set.dim()));
    case ProxSetup::Kind::UniformlyConvexLp:
      return Vec::Zero(set.dim());
  }
  throw ConfigError("min_point: unknown setup kind");
}

double bregman_diameter_sup(const ProxSetup& setup, const FeasibleSet& set) {
  check_supported_pair(setup, set);
  const int d = set.dim();
  switch (setup.kind()) {
    case ProxSetup::Kind::Ball: {
      const double diam = set.euclidean_diameter();
      return 0.5 * diam * diam;
    }
    case ProxSetup::Kind::Entropy: {
      const double gamma = setup.gamma();
      if (gamma > 0.0)
        return (1.0 + gamma) * std::log1p(static_cast<double>(d) / gamma);
      // pairwise sup diverges at gamma = 0; anchored diameter
      // sup_x D(x, uniform) = ln d
      return std::log(static_cast<double>(d));
    }
    case ProxSetup::Kind::UniformlyConvexLp: {
      const double s = (1.0 + setup.kappa()) / setup.kappa();
      return 2.0 * setup.scale() * std::pow(set.radius(), s);
    }
  }
  return 0.0;
}

}  // namespace zomd
