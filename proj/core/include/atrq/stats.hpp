#pragma once

#include <span>
#include <vector>

namespace atrq {

/// Midranks (1-based); tied values share the mean of the positions they span.
std::vector<double> fractional_ranks(std::span<const double> x);

/// Spearman's rho as the Pearson correlation of midrank vectors.
/// Requires equal lengths >= 3; throws Degenerate when either input is constant.
double spearman(std::span<const double> x, std::span<const double> y);

double pearson(std::span<const double> x, std::span<const double> y);

struct MetricReport {
  double spearman_rho = 0.0;
  double pearson_r = 0.0;
  double r_squared = 0.0;
  double rmse = 0.0;
  double mae = 0.0;
  double rmse_pct = 0.0;  // percent of max(targets) - min(targets)
  double mae_pct = 0.0;
};

/// Prediction-vs-target metrics. R^2 is 1 - SS_res / SS_tot about the target mean.
MetricReport regression_metrics(std::span<const double> predictions,
                                 std::span<const double> targets);

/// Percentage of a value relative to a dynamic range.
double range_percent(double value, double range);

struct MeanSd {
  double mean = 0.0;
  double sd = 0.0;  // sample standard deviation (n - 1)
};

MeanSd mean_and_sample_sd(std::span<const double> values);

}  // namespace atrq
