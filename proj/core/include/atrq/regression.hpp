#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "atrq/stats.hpp"

namespace atrq {

enum class Artifact { Blur, Noise };

std::string_view to_string(Artifact a) noexcept;
Artifact parse_artifact(std::string_view text);

/// Which scalar of an AtrScore a model consumes.
enum class AtrFeature {
  Fraction,  // AtrScore::value, in (0, 1]
  Count,     // AtrScore::raw_count, in pixels
};

std::string_view to_string(AtrFeature f) noexcept;
AtrFeature parse_feature(std::string_view text);

/// DMOS = exp(c + b1 * u + b2 * u^2), u = ln(atr).
struct RegressionModel {
  Artifact artifact = Artifact::Blur;
  double c = 0.0;
  double b1 = 0.0;
  double b2 = 0.0;
  AtrFeature feature = AtrFeature::Fraction;
  std::size_t sample_size = 0;  // 0 when not fitted here
  std::string fit_date;          // free-form metadata, may be empty

  std::string id() const;
  friend bool operator==(const RegressionModel&, const RegressionModel&) = default;
};

/// Throws Domain when atr <= 0 or is not finite.
double predict_dmos(const RegressionModel& model, double atr);

struct FitInput {
  std::vector<double> atr;
  std::vector<double> dmos;
  std::vector<std::size_t> excluded;  // input indices dropped because dmos <= 0
};

/// Drops records whose DMOS is not positive (log undefined) and validates ATR.
FitInput filter_fit_input(std::span<const double> atr, std::span<const double> dmos);

/// Ordinary least squares of ln(dmos) on [1, ln(atr), ln(atr)^2]. Non-positive
/// DMOS entries are excluded; fewer than three usable points raises
/// InsufficientData and a rank-deficient design raises Degenerate.
RegressionModel fit_loglog_poly2(std::span<const double> atr, std::span<const double> dmos,
                                 Artifact artifact, AtrFeature feature = AtrFeature::Fraction);

/// Metrics in linear DMOS space.
MetricReport evaluate_fit(const RegressionModel& model, std::span<const double> atr,
                          std::span<const double> dmos);

/// R^2 of ln(prediction) against ln(dmos); only positive-DMOS points count.
double log_space_r_squared(const RegressionModel& model, std::span<const double> atr,
                           std::span<const double> dmos);

/// Sum of squared residuals of ln(dmos); the quantity fit_loglog_poly2 minimises.
double log_space_sse(const RegressionModel& model, std::span<const double> atr,
                     std::span<const double> dmos);

/// Specialist models shipped with the tool. They were fitted against raw
/// mask pixel counts, hence AtrFeature::Count.
RegressionModel bundled_blur_model();
RegressionModel bundled_noise_model();

}  // namespace atrq
