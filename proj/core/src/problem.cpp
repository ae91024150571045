#include "zomd/problem.hpp"

#include <cmath>

namespace zomd {

double suboptimality(const ProblemSpec& problem, const Vec& x) {
  if (!problem.set.contains(x))
    throw DomainError("suboptimality: infeasible point " + format_point(x));
  return problem.value(x) - problem.f_star;
}

ProblemSpec make_sharp_norm(FeasibleSet set, Vec x_star, double m2) {
  if (!set.contains(x_star))
    throw ConfigError("sharp_norm: x* must be feasible");
  ProblemSpec p;
  p.name = "sharp_norm";
  p.d = set.dim();
  p.m2 = m2;
  p.x_star = x_star;
  p.f_star = 0.0;
  p.growth = Growth{1.0, 2.0 * m2, 2.0};
  p.set = std::move(set);
  p.objective = [x_star = std::move(x_star), m2](const Vec& x) {
    return m2 * (x - x_star).norm();
  };
  return p;
}

ProblemSpec make_quadratic(FeasibleSet set, Vec x_star,
                           double lipschitz_radius) {
  if (!set.contains(x_star))
    throw ConfigError("quadratic: x* must be feasible");
  ProblemSpec p;
  p.name = "quadratic";
  p.d = set.dim();
  double rad = lipschitz_radius;
  if (rad <= 0.0) {
    // gradient norm over the set plus a unit enlargement
    rad = set.euclidean_diameter() + 1.0;
  }
  p.m2 = rad;
  p.x_star = x_star;
  p.f_star = 0.0;
  p.growth = Growth{2.0, 1.0, 2.0};
  p.set = std::move(set);
  p.objective = [x_star = std::move(x_star)](const Vec& x) {
    return 0.5 * (x - x_star).squaredNorm();
  };
  return p;
}

ProblemSpec make_asym_abs(FeasibleSet set, Vec x_star, double w_plus,
                          double w_minus) {
  if (w_plus <= 0.0 || w_minus <= 0.0)
    throw ConfigError("asym_abs: weights must be positive");
  if (!set.contains(x_star))
    throw ConfigError("asym_abs: x* must be feasible");
  ProblemSpec p;
  p.name = "asym_abs";
  p.d = set.dim();
  p.m2 = std::sqrt(static_cast<double>(p.d)) * std::max(w_plus, w_minus);
  p.x_star = x_star;
  p.f_star = 0.0;
  p.growth = Growth{1.0, 2.0 * std::min(w_plus, w_minus), 2.0};
  p.set = std::move(set);
  p.objective = [x_star = std::move(x_star), w_plus, w_minus](const Vec& x) {
    double acc = 0.0;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      const double t = x[i] - x_star[i];
      acc += t >= 0.0 ? w_plus * t : -w_minus * t;
    }
    return acc;
  };
  return p;
}

ProblemSpec make_linear(FeasibleSet set, Vec a) {
  if (a.size() != set.dim()) throw ConfigError("linear: dimension mismatch");
  ProblemSpec p;
  p.name = "linear";
  p.d = set.dim();
  p.m2 = a.norm();
  switch (set.kind()) {
    case FeasibleSet::Kind::L2Ball: {
      const double n = a.norm();
      p.x_star = (n == 0.0) ? set.center()
                            : Vec(set.center() - (set.radius() / n) * a);
      break;
    }
    case FeasibleSet::Kind::Box: {
      p.x_star = Vec(set.dim());
      for (int i = 0; i < set.dim(); ++i)
        p.x_star[i] = a[i] >= 0.0 ? set.lower()[i] : set.upper()[i];
      break;
    }
    case FeasibleSet::Kind::Simplex: {
      Eigen::Index j = 0;
      a.minCoeff(&j);
      p.x_star = Vec::Zero(set.dim());
      p.x_star[j] = 1.0;
      break;
    }
    default:
      throw ConfigError("linear: minimizer not available on " +
                        set.describe());
  }
  p.f_star = a.dot(p.x_star);
  p.set = std::move(set);
  p.objective = [a = std::move(a)](const Vec& x) { return a.dot(x); };
  return p;
}

ProblemSpec make_max_linear(FeasibleSet set, std::vector<Vec> rows, Vec offsets,
                            Vec x_star) {
  if (rows.empty() || static_cast<Eigen::Index>(rows.size()) != offsets.size())
    throw ConfigError("max_linear: pieces/offsets mismatch");
  if (!set.contains(x_star))
    throw ConfigError("max_linear: x* must be feasible");
  ProblemSpec p;
  p.name = "max_linear";
  p.d = set.dim();
  double m2 = 0.0;
  for (const auto& r : rows) m2 = std::max(m2, r.norm());
  p.m2 = m2;
  auto eval = [rows = std::move(rows), offsets = std::move(offsets)](
                  const Vec& x) {
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < rows.size(); ++i)
      best = std::max(best, rows[i].dot(x) + offsets[static_cast<Eigen::Index>(i)]);
    return best;
  };
  p.f_star = eval(x_star);
  p.x_star = std::move(x_star);
  p.set = std::move(set);
  p.objective = std::move(eval);
  return p;
}

ProblemSpec make_constant(FeasibleSet set, double value) {
  ProblemSpec p;
  p.name = "constant";
  p.d = set.dim();
  p.m2 = 0.0;
  p.f_star = value;
  p.x_star = set.any_point();
  p.set = std::move(set);
  p.objective = [value](const Vec&) { return value; };
  return p;
}

}  // namespace zomd
