#include "atrq/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "atrq/error.hpp"

namespace atrq {
namespace {

void check_pair(std::span<const double> x, std::span<const double> y, const char* what) {
  if (x.size() != y.size()) {
    fail(ErrorKind::InvalidInput, std::string(what) + ": vectors differ in length");
  }
  if (x.size() < 3) {
    fail(ErrorKind::InsufficientData, std::string(what) + ": need at least 3 paired values");
  }
  auto finite = [](double v) { return std::isfinite(v); };
  if (!std::all_of(x.begin(), x.end(), finite) || !std::all_of(y.begin(), y.end(), finite)) {
    fail(ErrorKind::InvalidInput, std::string(what) + ": non-finite value");
  }
}

double mean_of(std::span<const double> v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double correlation(std::span<const double> x, std::span<const double> y, const char* what) {
  const double mx = mean_of(x);
  const double my = mean_of(y);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) {
    fail(ErrorKind::Degenerate, std::string(what) + ": constant input, correlation undefined");
  }
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

bool is_constant(std::span<const double> v) {
  return std::adjacent_find(v.begin(), v.end(), std::not_equal_to<>()) == v.end();
}

}  // namespace

std::vector<double> fractional_ranks(std::span<const double> x) {
  std::vector<std::size_t> order(x.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  std::vector<double> ranks(x.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i + 1;
    while (j < order.size() && x[order[j]] == x[order[i]]) ++j;
    // positions i..j-1 (0-based) share rank ((i+1) + j) / 2
    const double rank = 0.5 * static_cast<double>(i + 1 + j);
    for (std::size_t k = i; k < j; ++k) ranks[order[k]] = rank;
    i = j;
  }
  return ranks;
}

double spearman(std::span<const double> x, std::span<const double> y) {
  check_pair(x, y, "spearman");
  if (is_constant(x) || is_constant(y)) {
    fail(ErrorKind::Degenerate, "spearman: constant input, rank correlation undefined");
  }
  const auto rx = fractional_ranks(x);
  const auto ry = fractional_ranks(y);
  return correlation(rx, ry, "spearman");
}

double pearson(std::span<const double> x, std::span<const double> y) {
  check_pair(x, y, "pearson");
  if (is_constant(x) || is_constant(y)) {
    fail(ErrorKind::Degenerate, "pearson: constant input, correlation undefined");
  }
  return correlation(x, y, "pearson");
}

double range_percent(double value, double range) {
  if (!(range > 0.0)) fail(ErrorKind::Degenerate, "dynamic range must be positive");
  return 100.0 * value / range;
}

MetricReport regression_metrics(std::span<const double> predictions,
                                std::span<const double> targets) {
  check_pair(predictions, targets, "regression_metrics");
  const auto n = static_cast<double>(targets.size());
  const double target_mean = mean_of(targets);
  double ss_res = 0.0, ss_tot = 0.0, abs_sum = 0.0;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const double r = predictions[i] - targets[i];
    ss_res += r * r;
    abs_sum += std::abs(r);
    const double d = targets[i] - target_mean;
    ss_tot += d * d;
  }
  if (ss_tot == 0.0) {
    fail(ErrorKind::Degenerate, "regression_metrics: targets have zero variance");
  }
  const auto [lo, hi] = std::minmax_element(targets.begin(), targets.end());
  const double range = *hi - *lo;

  MetricReport m;
  m.r_squared = 1.0 - ss_res / ss_tot;
  m.rmse = std::sqrt(ss_res / n);
  m.mae = abs_sum / n;
  m.rmse_pct = range_percent(m.rmse, range);
  m.mae_pct = range_percent(m.mae, range);
  // Correlations are undefined for constant predictions; report 0 rather than fail
  // so that a flat model still yields its error metrics.
  if (is_constant(predictions)) {
    m.spearman_rho = 0.0;
    m.pearson_r = 0.0;
  } else {
    m.spearman_rho = spearman(predictions, targets);
    m.pearson_r = pearson(predictions, targets);
  }
  return m;
}

MeanSd mean_and_sample_sd(std::span<const double> values) {
  if (values.empty()) fail(ErrorKind::InsufficientData, "mean of an empty set");
  MeanSd out;
  out.mean = mean_of(values);
  if (values.size() < 2) return out;
  double ss = 0.0;
  for (double v : values) ss += (v - out.mean) * (v - out.mean);
  out.sd = std::sqrt(ss / static_cast<double>(values.size() - 1));
  return out;
}

}  // namespace atrq
