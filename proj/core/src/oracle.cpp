#include "zomd/oracle.hpp"

namespace zomd {

void NoisyOracle::check_domain(const Vec& x) const {
  if (!problem_->set.within_enlarged(x)) {
    throw DomainError("oracle query outside the tau-enlarged feasible set: " +
                      format_point(x));
  }
}

double NoisyOracle::noisy_value(const Vec& x, const Vec& xi) const {
  double v = problem_->value(x);
  if (xi.size()) {
    if (stochastic_.x_ref.size()) {
      v += xi.dot(x - stochastic_.x_ref);
    } else {
      v += xi.dot(x);
    }
  }
  return v;
}

std::pair<double, double> NoisyOracle::evaluate_pair(
    const Vec& x, const Vec& y, SeedStream& realization) const {
  check_domain(x);
  check_domain(y);
  Vec xi;
  if (stochastic_.kind != StochasticNoiseModel::Kind::None)
    xi = stochastic_.sample(realization, problem_->d);
  const double fx = noisy_value(x, xi) + adversarial_(x);
  const double fy = noisy_value(y, xi) + adversarial_(y);
  queries_.fetch_add(2, std::memory_order_relaxed);
  return {fx, fy};
}

double NoisyOracle::evaluate_single(const Vec& x,
                                    SeedStream& realization) const {
  check_domain(x);
  Vec xi;
  if (stochastic_.kind != StochasticNoiseModel::Kind::None)
    xi = stochastic_.sample(realization, problem_->d);
  queries_.fetch_add(1, std::memory_order_relaxed);
  return noisy_value(x, xi) + adversarial_(x);
}

double NoisyOracle::stochastic_value(const Vec& x,
                                     SeedStream& realization) const {
  Vec xi;
  if (stochastic_.kind != StochasticNoiseModel::Kind::None)
    xi = stochastic_.sample(realization, problem_->d);
  return noisy_value(x, xi);
}

}  // namespace zomd
