#include "zomd/stats.hpp"

#include <algorithm>
#include <cmath>

namespace zomd {

RateFit fit_rate(const std::vector<double>& t,
                 const std::vector<double>& value) {
  if (t.size() != value.size())
    throw ConfigError("fit_rate: mismatched lengths");
  std::vector<double> xs, ys;
  int excluded = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!(value[i] > 0.0) || !(t[i] > 0.0)) {
      ++excluded;
      continue;
    }
    xs.push_back(std::log10(t[i]));
    ys.push_back(std::log10(value[i]));
  }
  const auto n = static_cast<int>(xs.size());
  if (n < 4)
    throw ConfigError("fit_rate: need >= 4 usable points, have " +
                      std::to_string(n) + " (" + std::to_string(excluded) +
                      " excluded)");
  const auto [xmin, xmax] = std::minmax_element(xs.begin(), xs.end());
  if (*xmax - *xmin < 2.0 - 1e-9)
    throw ConfigError("fit_rate: grid must span >= 2 decades");

  double sx = 0.0, sy = 0.0;
  for (int i = 0; i < n; ++i) {
    sx += xs[i];
    sy += ys[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0.0, sxy = 0.0;
  for (int i = 0; i < n; ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  RateFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double rss = 0.0;
  for (int i = 0; i < n; ++i) {
    const double r = ys[i] - (fit.intercept + fit.slope * xs[i]);
    rss += r * r;
  }
  const double sigma2 = n > 2 ? rss / (n - 2) : 0.0;
  fit.half_width = 2.0 * std::sqrt(sigma2 / sxx);
  fit.excluded = excluded;
  return fit;
}

double nearest_rank_quantile(std::vector<double> values, double level) {
  if (values.empty()) throw ConfigError("quantile of an empty sample");
  if (!(level > 0.0 && level <= 1.0))
    throw ConfigError("quantile level must lie in (0, 1]");
  std::sort(values.begin(), values.end());
  const auto n = static_cast<double>(values.size());
  auto rank = static_cast<std::size_t>(std::ceil(level * n));
  if (rank < 1) rank = 1;
  return values[rank - 1];
}

std::vector<std::vector<double>> quantile_report(
    const std::vector<std::vector<double>>& per_trial_series,
    const std::vector<double>& levels) {
  if (per_trial_series.empty())
    throw ConfigError("quantile_report: no trials");
  const std::size_t trials = per_trial_series.size();
  for (double lv : levels) {
    if (lv >= 0.9 && trials < 50)
      throw ConfigError(
          "quantile_report: levels >= 0.9 need at least 50 trials, have " +
          std::to_string(trials));
  }
  const std::size_t n_points = per_trial_series.front().size();
  for (const auto& s : per_trial_series) {
    if (s.size() != n_points)
      throw ConfigError("quantile_report: ragged checkpoint series");
  }
  std::vector<std::vector<double>> out(levels.size(),
                                       std::vector<double>(n_points));
  std::vector<double> buf(trials);
  for (std::size_t j = 0; j < n_points; ++j) {
    for (std::size_t i = 0; i < trials; ++i) buf[i] = per_trial_series[i][j];
    for (std::size_t l = 0; l < levels.size(); ++l)
      out[l][j] = nearest_rank_quantile(buf, levels[l]);
  }
  return out;
}

double median(std::vector<double> values) {
  if (values.empty()) throw ConfigError("median of an empty sample");
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  return n % 2 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

}  // namespace zomd
