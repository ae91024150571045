#include "zomd/noise.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace zomd {

Vec sample_sphere(SeedStream& stream, int d) {
  if (d < 1) throw DomainError("sample_sphere: dimension must be >= 1");
  Vec e(d);
  double norm = 0.0;
  do {
    for (int i = 0; i < d; ++i) e[i] = stream.next_gaussian();
    norm = e.norm();
  } while (norm == 0.0);  // degenerate draw, resample
  e /= norm;
  return e;
}

Vec sample_ball(SeedStream& stream, int d) {
  Vec e = sample_sphere(stream, d);
  const double r = std::pow(stream.next_double_open(), 1.0 / d);
  return r * e;
}

StochasticNoiseModel StochasticNoiseModel::pareto(double alpha, double scale) {
  StochasticNoiseModel m;
  m.kind = Kind::LinearPareto;
  m.alpha = alpha;
  m.scale = scale;
  return m;
}

StochasticNoiseModel StochasticNoiseModel::student_like(int dof, double scale) {
  StochasticNoiseModel m;
  m.kind = Kind::LinearStudentLike;
  m.dof = dof;
  m.scale = scale;
  return m;
}

void StochasticNoiseModel::validate(double kappa) const {
  if (kind == Kind::None) return;
  if (scale < 0.0) throw ConfigError("noise scale must be non-negative");
  const double tail = (kind == Kind::LinearPareto) ? alpha
                                                   : static_cast<double>(dof);
  if (tail <= 1.0 + kappa) {
    std::ostringstream os;
    os << "moment assumption violated: tail index " << tail
       << " must exceed 1 + kappa = " << (1.0 + kappa);
    throw ConfigError(os.str());
  }
  if (kind == Kind::LinearStudentLike && dof < 2) {
    throw ConfigError("student-like noise needs dof >= 2");
  }
}

double StochasticNoiseModel::sample_radius(SeedStream& stream) const {
  switch (kind) {
    case Kind::None:
      return 0.0;
    case Kind::LinearPareto:
      return scale * std::pow(stream.next_double_open(), -1.0 / alpha);
    case Kind::LinearStudentLike: {
      const double z = stream.next_gaussian();
      double chi2 = 0.0;
      for (int i = 0; i < dof; ++i) {
        const double g = stream.next_gaussian();
        chi2 += g * g;
      }
      return scale * std::abs(z) / std::sqrt(chi2 / dof);
    }
  }
  return 0.0;
}

Vec StochasticNoiseModel::sample(SeedStream& stream, int d) const {
  if (kind == Kind::None) return Vec::Zero(d);
  const double r = sample_radius(stream);
  return r * sample_sphere(stream, d);
}

double StochasticNoiseModel::radial_moment(double m) const {
  switch (kind) {
    case Kind::None:
      return 0.0;
    case Kind::LinearPareto: {
      if (m >= alpha)
        throw ConfigError("Pareto moment of order >= alpha diverges");
      return scale * std::pow(alpha / (alpha - m), 1.0 / m);
    }
    case Kind::LinearStudentLike: {
      if (m >= dof)
        throw ConfigError("student-like moment of order >= dof diverges");
      // E|t_nu|^m = nu^{m/2} Gamma((m+1)/2) Gamma((nu-m)/2) /
      //             (sqrt(pi) Gamma(nu/2))
      const double nu = dof;
      const double lg = 0.5 * m * std::log(nu) + std::lgamma((m + 1.0) / 2.0) +
                        std::lgamma((nu - m) / 2.0) -
                        0.5 * std::log(std::numbers::pi) -
                        std::lgamma(nu / 2.0);
      return scale * std::exp(lg / m);
    }
  }
  return 0.0;
}

double StochasticNoiseModel::effective_m2(double base_m2, double kappa) const {
  if (kind == Kind::None) return base_m2;
  if (scale == 0.0) return base_m2;
  return base_m2 + radial_moment(1.0 + kappa);
}

std::string StochasticNoiseModel::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::None:
      os << "none";
      break;
    case Kind::LinearPareto:
      os << "linear_pareto(alpha=" << alpha << ", scale=" << scale << ")";
      break;
    case Kind::LinearStudentLike:
      os << "linear_student(dof=" << dof << ", scale=" << scale << ")";
      break;
  }
  return os.str();
}

MomentReport moment_report(const StochasticNoiseModel& model, double kappa,
                           std::int64_t n_samples, int d, SeedStream& stream) {
  if (n_samples < 10000)
    throw ConfigError("moment_report needs n_samples >= 1e4");
  const double order = 1.0 + kappa;
  double mean = 0.0, m2 = 0.0;
  for (std::int64_t i = 0; i < n_samples; ++i) {
    // ||xi||_2 equals the radial magnitude; skip the direction draw.
    double v = std::pow(model.sample_radius(stream), order);
    const double delta = v - mean;
    mean += delta / static_cast<double>(i + 1);
    m2 += delta * (v - mean);
  }
  (void)d;
  const double var = (n_samples > 1) ? m2 / static_cast<double>(n_samples - 1)
                                     : 0.0;
  MomentReport r;
  r.raw_mean = mean;
  r.stderr_raw = std::sqrt(var / static_cast<double>(n_samples));
  r.moment = (mean > 0.0) ? std::pow(mean, 1.0 / order) : 0.0;
  return r;
}

AdversarialNoiseModel AdversarialNoiseModel::sign_sin(double delta,
                                                      double epsilon0,
                                                      Vec direction) {
  AdversarialNoiseModel m;
  m.kind = Kind::SignSin;
  m.delta = delta;
  m.epsilon0 = epsilon0;
  m.direction = std::move(direction);
  return m;
}

AdversarialNoiseModel AdversarialNoiseModel::constant(double delta) {
  AdversarialNoiseModel m;
  m.kind = Kind::Constant;
  m.delta = delta;
  return m;
}

void AdversarialNoiseModel::validate() const {
  if (delta < 0.0) throw ConfigError("adversarial bound Delta must be >= 0");
  if (kind == Kind::SignSin && epsilon0 <= 0.0)
    throw ConfigError("sign_sin oscillation scale must be positive");
}

double AdversarialNoiseModel::operator()(const Vec& x) const {
  switch (kind) {
    case Kind::None:
      return 0.0;
    case Kind::Constant:
      return delta;
    case Kind::SignSin: {
      double t;
      if (direction.size() == 0) {
        t = x.sum();
      } else {
        t = direction.dot(x);
      }
      return delta * (std::sin(t / epsilon0) >= 0.0 ? 1.0 : -1.0);
    }
  }
  return 0.0;
}

std::string AdversarialNoiseModel::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::None:
      os << "none";
      break;
    case Kind::Constant:
      os << "constant(delta=" << delta << ")";
      break;
    case Kind::SignSin:
      os << "sign_sin(delta=" << delta << ", epsilon0=" << epsilon0 << ")";
      break;
  }
  return os.str();
}

}  // namespace zomd
