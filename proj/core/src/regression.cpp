#include "atrq/regression.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <fmt/format.h>

#include "atrq/error.hpp"

namespace atrq {

std::string_view to_string(Artifact a) noexcept {
  return a == Artifact::Blur ? "blur" : "noise";
}

Artifact parse_artifact(std::string_view text) {
  if (text == "blur" || text == "gblur") return Artifact::Blur;
  if (text == "noise" || text == "wn") return Artifact::Noise;
  fail(ErrorKind::InvalidInput, fmt::format("unknown artifact '{}'", text));
}

std::string_view to_string(AtrFeature f) noexcept {
  return f == AtrFeature::Fraction ? "fraction" : "count";
}

AtrFeature parse_feature(std::string_view text) {
  if (text == "fraction") return AtrFeature::Fraction;
  if (text == "count") return AtrFeature::Count;
  fail(ErrorKind::InvalidInput, fmt::format("unknown ATR feature '{}'", text));
}

std::string RegressionModel::id() const {
  return fmt::format("{}-loglog2-{}", to_string(artifact), to_string(feature));
}

double predict_dmos(const RegressionModel& model, double atr) {
  if (!std::isfinite(atr) || atr <= 0.0) {
    fail(ErrorKind::Domain, fmt::format("predict_dmos: ATR must be positive, got {}", atr));
  }
  const double u = std::log(atr);
  return std::exp(model.c + model.b1 * u + model.b2 * u * u);
}

FitInput filter_fit_input(std::span<const double> atr, std::span<const double> dmos) {
  if (atr.size() != dmos.size()) {
    fail(ErrorKind::InvalidInput, "fit: ATR and DMOS vectors differ in length");
  }
  FitInput in;
  for (std::size_t i = 0; i < atr.size(); ++i) {
    if (!std::isfinite(atr[i]) || atr[i] <= 0.0) {
      fail(ErrorKind::Domain, fmt::format("fit: ATR at index {} is not positive", i));
    }
    if (!std::isfinite(dmos[i])) {
      fail(ErrorKind::InvalidInput, fmt::format("fit: DMOS at index {} is not finite", i));
    }
    if (dmos[i] <= 0.0) {
      in.excluded.push_back(i);
      continue;
    }
    in.atr.push_back(atr[i]);
    in.dmos.push_back(dmos[i]);
  }
  return in;
}

RegressionModel fit_loglog_poly2(std::span<const double> atr, std::span<const double> dmos,
                                 Artifact artifact, AtrFeature feature) {
  const FitInput in = filter_fit_input(atr, dmos);
  const auto n = static_cast<Eigen::Index>(in.atr.size());
  if (n < 3) {
    fail(ErrorKind::InsufficientData,
         fmt::format("fit: need at least 3 points with positive DMOS, have {}", n));
  }

  Eigen::VectorXd u(n);
  Eigen::VectorXd z(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    u(i) = std::log(in.atr[static_cast<std::size_t>(i)]);
    z(i) = std::log(in.dmos[static_cast<std::size_t>(i)]);
  }
  // Centre and scale ln(atr) so the quadratic column is not nearly collinear
  // with the linear one when scores cluster.
  const double centre = u.mean();
  const double scale = std::max((u.array() - centre).abs().maxCoeff(), 0.0);
  if (scale == 0.0) fail(ErrorKind::Degenerate, "fit: all ATR values are equal");

  Eigen::MatrixXd design(n, 3);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double v = (u(i) - centre) / scale;
    design(i, 0) = 1.0;
    design(i, 1) = v;
    design(i, 2) = v * v;
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
  qr.setThreshold(1e-10);
  if (qr.rank() < 3) {
    fail(ErrorKind::Degenerate, "fit: design matrix is rank deficient (need 3 distinct ATR values)");
  }
  const Eigen::Vector3d k = qr.solve(z);

  // k0 + k1 v + k2 v^2 with v = (u - m) / s, expanded back into powers of u.
  const double m = centre;
  const double s = scale;
  RegressionModel model;
  model.artifact = artifact;
  model.feature = feature;
  model.b2 = k(2) / (s * s);
  model.b1 = k(1) / s - 2.0 * k(2) * m / (s * s);
  model.c = k(0) - k(1) * m / s + k(2) * m * m / (s * s);
  model.sample_size = static_cast<std::size_t>(n);
  return model;
}

MetricReport evaluate_fit(const RegressionModel& model, std::span<const double> atr,
                          std::span<const double> dmos) {
  if (atr.size() != dmos.size()) {
    fail(ErrorKind::InvalidInput, "evaluate_fit: ATR and DMOS vectors differ in length");
  }
  std::vector<double> pred(atr.size());
  for (std::size_t i = 0; i < atr.size(); ++i) pred[i] = predict_dmos(model, atr[i]);
  return regression_metrics(pred, dmos);
}

double log_space_sse(const RegressionModel& model, std::span<const double> atr,
                     std::span<const double> dmos) {
  const FitInput in = filter_fit_input(atr, dmos);
  double sse = 0.0;
  for (std::size_t i = 0; i < in.atr.size(); ++i) {
    const double u = std::log(in.atr[i]);
    const double r = std::log(in.dmos[i]) - (model.c + model.b1 * u + model.b2 * u * u);
    sse += r * r;
  }
  return sse;
}

double log_space_r_squared(const RegressionModel& model, std::span<const double> atr,
                           std::span<const double> dmos) {
  const FitInput in = filter_fit_input(atr, dmos);
  if (in.atr.size() < 3) fail(ErrorKind::InsufficientData, "log-space R^2 needs 3 points");
  std::vector<double> pred(in.atr.size());
  std::vector<double> target(in.atr.size());
  for (std::size_t i = 0; i < in.atr.size(); ++i) {
    pred[i] = std::log(predict_dmos(model, in.atr[i]));
    target[i] = std::log(in.dmos[i]);
  }
  return regression_metrics(pred, target).r_squared;
}

RegressionModel bundled_blur_model() {
  RegressionModel m;
  m.artifact = Artifact::Blur;
  m.c = 4.7232;
  m.b1 = 0.0027;
  m.b2 = -0.0114;
  m.feature = AtrFeature::Count;
  return m;
}

RegressionModel bundled_noise_model() {
  RegressionModel m;
  m.artifact = Artifact::Noise;
  m.c = 0.0526;
  m.b1 = 1.1162;
  m.b2 = -0.0717;
  m.feature = AtrFeature::Count;
  return m;
}

}  // namespace atrq
