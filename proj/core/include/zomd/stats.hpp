#pragma once

#include <cstdint>
#include <vector>

#include "zomd/types.hpp"

namespace zomd {

/// Streaming mean/variance (Welford).
class RunningStat {
 public:
  void push(double v) {
    ++n_;
    const double d = v - mean_;
    mean_ += d / static_cast<double>(n_);
    m2_ += d * (v - mean_);
  }
  std::int64_t count() const { return n_; }
  double mean() const { return mean_; }
  double variance() const {
    return n_ > 1 ? m2_ / static_cast<double>(n_ - 1) : 0.0;
  }
  double stderr_mean() const {
    return n_ > 0 ? std::sqrt(variance() / static_cast<double>(n_)) : 0.0;
  }

 private:
  std::int64_t n_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

struct RateFit {
  double slope;
  double intercept;    // in log10 space
  double half_width;   // 2 x standard error of the slope
  int excluded;        // non-positive values dropped before fitting
};

/// Least-squares fit of log10(value) against log10(t). Needs >= 4 usable
/// points spanning >= 2 decades in t.
RateFit fit_rate(const std::vector<double>& t, const std::vector<double>& value);

/// Nearest-rank quantile (no interpolation): the ceil(level * n)-th smallest.
double nearest_rank_quantile(std::vector<double> values, double level);

/// Per-checkpoint nearest-rank quantiles across trials. Levels >= 0.9 need
/// at least 50 trials.
std::vector<std::vector<double>> quantile_report(
    const std::vector<std::vector<double>>& per_trial_series,
    const std::vector<double>& levels);

double median(std::vector<double> values);

}  // namespace zomd
