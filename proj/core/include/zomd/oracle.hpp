#pragma once

#include <atomic>
#include <cstdint>
#include <utility>

#include "zomd/noise.hpp"
#include "zomd/problem.hpp"
#include "zomd/seed_stream.hpp"

namespace zomd {

/// Parameters of the oracle/noise assumptions: kappa in (0, 1],
/// Lipschitz bound M2, adversarial bound Delta >= 0, smoothing radius tau.
struct AssumptionParams {
  double kappa = 1.0;
  double m2 = 1.0;
  double delta = 0.0;
  double tau = 1e-3;

  void validate() const {
    if (!(kappa > 0.0 && kappa <= 1.0))
      throw ConfigError("kappa must lie in (0, 1]");
    if (m2 <= 0.0) throw ConfigError("M2 must be positive");
    if (delta < 0.0) throw ConfigError("Delta must be non-negative");
    if (tau <= 0.0) throw ConfigError("tau must be positive");
  }
};

/// Two-point zeroth-order oracle: phi(x, xi) = f(x, xi) + delta(x), where a
/// pair query shares one stochastic realization xi. Immutable apart from the
/// atomic query counter.
class NoisyOracle {
 public:
  NoisyOracle(const ProblemSpec& problem, StochasticNoiseModel stochastic,
              AdversarialNoiseModel adversarial)
      : problem_(&problem),
        stochastic_(std::move(stochastic)),
        adversarial_(std::move(adversarial)) {}

  const ProblemSpec& problem() const { return *problem_; }
  const StochasticNoiseModel& stochastic() const { return stochastic_; }
  const AdversarialNoiseModel& adversarial() const { return adversarial_; }
  double delta_bound() const { return adversarial_.delta; }

  /// (phi(x, xi), phi(y, xi)) with the same xi drawn from `realization`.
  /// Both points must lie in the tau-enlarged feasible set.
  std::pair<double, double> evaluate_pair(const Vec& x, const Vec& y,
                                          SeedStream& realization) const;

  /// One value phi(x, xi); counts a single query.
  double evaluate_single(const Vec& x, SeedStream& realization) const;

  /// Noiseless stochastic value f(x, xi) (no adversarial term); used by
  /// tests that check |phi - f(.,xi)| <= Delta.
  double stochastic_value(const Vec& x, SeedStream& realization) const;

  std::uint64_t query_count() const {
    return queries_.load(std::memory_order_relaxed);
  }
  void reset_query_count() { queries_.store(0, std::memory_order_relaxed); }

 private:
  double noisy_value(const Vec& x, const Vec& xi) const;
  void check_domain(const Vec& x) const;

  const ProblemSpec* problem_;
  StochasticNoiseModel stochastic_;
  AdversarialNoiseModel adversarial_;
  mutable std::atomic<std::uint64_t> queries_{0};
};

}  // namespace zomd
