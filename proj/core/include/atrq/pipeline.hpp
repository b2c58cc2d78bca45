#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "atrq/atr_filter.hpp"
#include "atrq/curvature.hpp"
#include "atrq/regression.hpp"
#include "atrq/stats.hpp"

namespace atrq {

/// Specialist filter tuned for Gaussian blur.
inline const FilterParams kBlurFilter{4.0, 2.5};
/// Specialist filter tuned for additive white noise.
inline const FilterParams kNoiseFilter{1.5, 1.0};

enum class ArtifactLabel { Blur, Noise, Reference, Unknown };

std::string_view to_string(ArtifactLabel label) noexcept;

struct DatasetRecord {
  std::string source;  // file path or synthetic identifier
  GrayImage image;
  double dmos = 0.0;
  ArtifactLabel label = ArtifactLabel::Unknown;
  std::string ref_id;
};

// ---------------------------------------------------------------------------
// Two-filter signature and the hybrid classify-then-quantify predictor.

struct Signature {
  AtrScore atr_blur;   // kBlurFilter response
  AtrScore atr_noise;  // kNoiseFilter response
};

Signature compute_signature(const CurvatureBundle& bundle);
/// Runs exactly one curvature analysis and scores both filters on it.
Signature compute_signature(const GrayImage& img);

/// Blur when ATR_noise > ATR_blur, otherwise Noise (ties go to Noise).
Artifact classify_artifact(const Signature& sig) noexcept;

/// The scalar a model consumes from a score. Zero scores are clamped to one
/// pixel (1 / pixel_count as a fraction, 1 as a count) and reported via clamped.
double model_input(const AtrScore& score, AtrFeature feature, bool* clamped = nullptr);

struct HybridPrediction {
  Artifact artifact = Artifact::Noise;
  double dmos_hat = 0.0;
  Signature signature;
  std::string model_used;
  double model_input = 0.0;
  bool degenerate = false;  // the routed ATR was zero and got clamped
};

HybridPrediction predict_quality(const Signature& sig, const RegressionModel& blur_model,
                                 const RegressionModel& noise_model);
HybridPrediction predict_quality(const GrayImage& img, const RegressionModel& blur_model,
                                 const RegressionModel& noise_model);

// ---------------------------------------------------------------------------
// Calibration.

struct GridCell {
  FilterParams params;
  double rho = 0.0;  // Spearman of ATR fraction against DMOS
  bool degenerate = false;
};

struct CalibrationResult {
  FilterParams best_params{1.0, 1.0};
  double best_rho = 0.0;
  double best_abs_rho = 0.0;
  std::vector<GridCell> grid;  // alpha-major, in input order
};

/// 0.5, 1.0, ..., 5.0
std::vector<double> default_calibration_axis();

/// One analysis per image, reused across every grid cell. Cells whose rho is
/// undefined are flagged and skipped; ties on |rho| go to the
/// lexicographically smallest (alpha, beta).
CalibrationResult grid_search_calibrate(std::span<const CurvatureBundle> bundles,
                                        std::span<const double> dmos,
                                        std::span<const double> alpha_grid,
                                        std::span<const double> beta_grid);
CalibrationResult grid_search_calibrate(std::span<const DatasetRecord> records,
                                        std::span<const double> alpha_grid,
                                        std::span<const double> beta_grid);

// ---------------------------------------------------------------------------
// Grouped K-fold cross-validation.

struct ScoredRecord {
  double score = 0.0;  // model input (already clamped, positive)
  double dmos = 0.0;
  std::string group;
};

struct FoldResult {
  std::vector<std::size_t> test_indices;
  std::vector<std::string> test_groups;
  RegressionModel model;
  MetricReport metrics;     // predictions vs DMOS on the test fold
  double score_rho = 0.0;   // Spearman of ATR against DMOS on the test fold
  double score_r = 0.0;     // Pearson of ATR against DMOS on the test fold
  std::size_t train_excluded = 0;  // training records dropped for DMOS <= 0
};

struct CvSummary {
  MeanSd spearman_rho, pearson_r, r_squared, rmse, mae, rmse_pct, mae_pct;
  MeanSd score_rho, score_r;
};

struct CvReport {
  std::size_t k = 0;
  std::uint64_t seed = 0;
  Artifact artifact = Artifact::Blur;
  AtrFeature feature = AtrFeature::Fraction;
  std::vector<FoldResult> folds;
  std::vector<std::size_t> fold_of;  // fold index per input record
  CvSummary summary;
  std::size_t clamped = 0;           // records whose ATR was zero
};

/// Groups are sorted, shuffled with a seeded generator and dealt round-robin.
/// Returns the fold index of every record.
std::vector<std::size_t> assign_folds(std::span<const std::string> groups, std::size_t k,
                                      std::uint64_t seed);

CvReport kfold_cross_validate(std::span<const ScoredRecord> records, std::size_t k,
                              Artifact artifact, AtrFeature feature, std::uint64_t seed);
CvReport kfold_cross_validate(std::span<const DatasetRecord> records, std::size_t k,
                              const FilterParams& params, Artifact artifact, std::uint64_t seed,
                              AtrFeature feature = AtrFeature::Fraction);

// ---------------------------------------------------------------------------
// End-to-end evaluation on labelled distorted records.

struct EndToEndReport {
  MetricReport metrics;        // dmos_hat vs DMOS
  double score_rho = 0.0;      // routed ATR vs DMOS
  double score_r = 0.0;
  double accuracy = 0.0;
  std::size_t evaluated = 0;
  std::size_t correct = 0;
  std::size_t degenerate = 0;
  std::vector<std::size_t> record_indices;  // into the input span
  std::vector<HybridPrediction> predictions;
};

/// Records labelled Reference or Unknown are skipped.
EndToEndReport evaluate_end_to_end(std::span<const DatasetRecord> records,
                                   const RegressionModel& blur_model,
                                   const RegressionModel& noise_model);

/// Analyses every record image, in parallel when more than one is given.
std::vector<CurvatureBundle> analyze_all(std::span<const DatasetRecord> records);

}  // namespace atrq
