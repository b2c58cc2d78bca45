#include "atrq/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fmt/format.h>
#include <map>
#include <random>
#include <thread>

#include "atrq/error.hpp"

namespace atrq {
namespace {

// Runs fn(i) for i in [0, n). Each index writes only its own output slot, so
// results are independent of scheduling.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
  const std::size_t workers =
      std::min<std::size_t>(n, std::max(1u, std::thread::hardware_concurrency()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        (void)w;
        for (std::size_t i = next++; i < n && !failed; i = next++) {
          try {
            fn(i);
          } catch (...) {
            if (!failed.exchange(true)) error = std::current_exception();
          }
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace

std::string_view to_string(ArtifactLabel label) noexcept {
  switch (label) {
    case ArtifactLabel::Blur: return "blur";
    case ArtifactLabel::Noise: return "noise";
    case ArtifactLabel::Reference: return "reference";
    case ArtifactLabel::Unknown: return "unknown";
  }
  return "unknown";
}

Signature compute_signature(const CurvatureBundle& bundle) {
  return {score_bundle(bundle, kBlurFilter), score_bundle(bundle, kNoiseFilter)};
}

Signature compute_signature(const GrayImage& img) { return compute_signature(analyze(img)); }

Artifact classify_artifact(const Signature& sig) noexcept {
  return sig.atr_noise.value > sig.atr_blur.value ? Artifact::Blur : Artifact::Noise;
}

double model_input(const AtrScore& score, AtrFeature feature, bool* clamped) {
  const bool zero = score.raw_count == 0;
  if (clamped) *clamped = zero;
  const double count = zero ? 1.0 : static_cast<double>(score.raw_count);
  if (feature == AtrFeature::Count) return count;
  if (score.pixel_count == 0) fail(ErrorKind::InvalidInput, "ATR score has no pixel count");
  return zero ? 1.0 / static_cast<double>(score.pixel_count) : score.value;
}

HybridPrediction predict_quality(const Signature& sig, const RegressionModel& blur_model,
                                 const RegressionModel& noise_model) {
  if (blur_model.artifact != Artifact::Blur || noise_model.artifact != Artifact::Noise) {
    fail(ErrorKind::InvalidInput, "predict_quality: models must be tagged blur and noise");
  }
  HybridPrediction p;
  p.signature = sig;
  p.artifact = classify_artifact(sig);
  const bool blur = p.artifact == Artifact::Blur;
  const RegressionModel& model = blur ? blur_model : noise_model;
  const AtrScore& routed = blur ? sig.atr_blur : sig.atr_noise;
  p.model_input = model_input(routed, model.feature, &p.degenerate);
  p.dmos_hat = predict_dmos(model, p.model_input);
  p.model_used = model.id();
  return p;
}

HybridPrediction predict_quality(const GrayImage& img, const RegressionModel& blur_model,
                                 const RegressionModel& noise_model) {
  return predict_quality(compute_signature(img), blur_model, noise_model);
}

std::vector<CurvatureBundle> analyze_all(std::span<const DatasetRecord> records) {
  std::vector<CurvatureBundle> bundles(records.size());
  parallel_for(records.size(), [&](std::size_t i) { bundles[i] = analyze(records[i].image); });
  return bundles;
}

// ---------------------------------------------------------------------------

std::vector<double> default_calibration_axis() {
  std::vector<double> axis;
  for (int i = 1; i <= 10; ++i) axis.push_back(0.5 * i);
  return axis;
}

CalibrationResult grid_search_calibrate(std::span<const CurvatureBundle> bundles,
                                        std::span<const double> dmos,
                                        std::span<const double> alpha_grid,
                                        std::span<const double> beta_grid) {
  if (bundles.size() != dmos.size()) {
    fail(ErrorKind::InvalidInput, "calibrate: bundle and DMOS counts differ");
  }
  if (bundles.size() < 3) fail(ErrorKind::InsufficientData, "calibrate: need at least 3 records");
  if (alpha_grid.empty() || beta_grid.empty()) {
    fail(ErrorKind::InvalidInput, "calibrate: parameter grids must be non-empty");
  }

  std::vector<GridCell> cells;
  for (double a : alpha_grid) {
    for (double b : beta_grid) cells.push_back({FilterParams(a, b), 0.0, false});
  }

  parallel_for(cells.size(), [&](std::size_t c) {
    std::vector<double> atr(bundles.size());
    for (std::size_t i = 0; i < bundles.size(); ++i) {
      atr[i] = score_bundle(bundles[i], cells[c].params).value;
    }
    try {
      cells[c].rho = spearman(atr, dmos);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Degenerate) throw;
      cells[c].rho = 0.0;
      cells[c].degenerate = true;
    }
  });

  const GridCell* best = nullptr;
  for (const GridCell& cell : cells) {
    if (cell.degenerate) continue;
    if (best == nullptr) {
      best = &cell;
      continue;
    }
    const double a = std::abs(cell.rho);
    const double b = std::abs(best->rho);
    if (a > b || (a == b && cell.params < best->params)) best = &cell;
  }
  if (best == nullptr) {
    fail(ErrorKind::Degenerate, "calibrate: every grid cell produced an undefined correlation");
  }

  CalibrationResult result;
  result.best_params = best->params;
  result.best_rho = best->rho;
  result.best_abs_rho = std::abs(best->rho);
  result.grid = std::move(cells);
  return result;
}

CalibrationResult grid_search_calibrate(std::span<const DatasetRecord> records,
                                        std::span<const double> alpha_grid,
                                        std::span<const double> beta_grid) {
  const auto bundles = analyze_all(records);
  std::vector<double> dmos;
  dmos.reserve(records.size());
  for (const auto& r : records) dmos.push_back(r.dmos);
  return grid_search_calibrate(bundles, dmos, alpha_grid, beta_grid);
}

// ---------------------------------------------------------------------------

std::vector<std::size_t> assign_folds(std::span<const std::string> groups, std::size_t k,
                                      std::uint64_t seed) {
  if (k < 2) fail(ErrorKind::InvalidInput, "cross-validation needs K >= 2");
  std::vector<std::string> unique(groups.begin(), groups.end());
  std::sort(unique.begin(), unique.end());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
  if (unique.size() < k) {
    fail(ErrorKind::InvalidInput,
         fmt::format("cross-validation needs at least K={} reference groups, have {}", k,
                     unique.size()));
  }
  std::mt19937_64 rng(seed);
  std::shuffle(unique.begin(), unique.end(), rng);

  std::map<std::string, std::size_t> fold_of_group;
  for (std::size_t i = 0; i < unique.size(); ++i) fold_of_group[unique[i]] = i % k;

  std::vector<std::size_t> fold_of(groups.size());
  for (std::size_t i = 0; i < groups.size(); ++i) fold_of[i] = fold_of_group.at(groups[i]);
  return fold_of;
}

CvReport kfold_cross_validate(std::span<const ScoredRecord> records, std::size_t k,
                              Artifact artifact, AtrFeature feature, std::uint64_t seed) {
  std::vector<std::string> groups;
  groups.reserve(records.size());
  for (const auto& r : records) {
    if (r.group.empty()) fail(ErrorKind::InvalidInput, "cross-validation record has no group id");
    groups.push_back(r.group);
  }

  CvReport report;
  report.k = k;
  report.seed = seed;
  report.artifact = artifact;
  report.feature = feature;
  report.fold_of = assign_folds(groups, k, seed);
  report.folds.resize(k);

  for (std::size_t f = 0; f < k; ++f) {
    FoldResult& fold = report.folds[f];
    std::vector<double> train_atr, train_dmos, test_atr, test_dmos;
    for (std::size_t i = 0; i < records.size(); ++i) {
      if (report.fold_of[i] == f) {
        fold.test_indices.push_back(i);
        test_atr.push_back(records[i].score);
        test_dmos.push_back(records[i].dmos);
        if (std::find(fold.test_groups.begin(), fold.test_groups.end(), records[i].group) ==
            fold.test_groups.end()) {
          fold.test_groups.push_back(records[i].group);
        }
      } else {
        train_atr.push_back(records[i].score);
        train_dmos.push_back(records[i].dmos);
      }
    }
    fold.train_excluded = filter_fit_input(train_atr, train_dmos).excluded.size();
    fold.model = fit_loglog_poly2(train_atr, train_dmos, artifact, feature);
    fold.metrics = evaluate_fit(fold.model, test_atr, test_dmos);
    fold.score_rho = spearman(test_atr, test_dmos);
    fold.score_r = pearson(test_atr, test_dmos);
  }

  auto collect = [&](auto member) {
    std::vector<double> v;
    for (const auto& fold : report.folds) v.push_back(member(fold));
    return mean_and_sample_sd(v);
  };
  CvSummary& s = report.summary;
  s.spearman_rho = collect([](const FoldResult& f) { return f.metrics.spearman_rho; });
  s.pearson_r = collect([](const FoldResult& f) { return f.metrics.pearson_r; });
  s.r_squared = collect([](const FoldResult& f) { return f.metrics.r_squared; });
  s.rmse = collect([](const FoldResult& f) { return f.metrics.rmse; });
  s.mae = collect([](const FoldResult& f) { return f.metrics.mae; });
  s.rmse_pct = collect([](const FoldResult& f) { return f.metrics.rmse_pct; });
  s.mae_pct = collect([](const FoldResult& f) { return f.metrics.mae_pct; });
  s.score_rho = collect([](const FoldResult& f) { return f.score_rho; });
  s.score_r = collect([](const FoldResult& f) { return f.score_r; });
  return report;
}

CvReport kfold_cross_validate(std::span<const DatasetRecord> records, std::size_t k,
                              const FilterParams& params, Artifact artifact, std::uint64_t seed,
                              AtrFeature feature) {
  const auto bundles = analyze_all(records);
  std::vector<ScoredRecord> scored;
  std::size_t clamped = 0;
  for (std::size_t i = 0; i < records.size(); ++i) {
    bool was_zero = false;
    const double x = model_input(score_bundle(bundles[i], params), feature, &was_zero);
    clamped += was_zero;
    scored.push_back({x, records[i].dmos, records[i].ref_id});
  }
  CvReport report = kfold_cross_validate(scored, k, artifact, feature, seed);
  report.clamped = clamped;
  return report;
}

// ---------------------------------------------------------------------------

EndToEndReport evaluate_end_to_end(std::span<const DatasetRecord> records,
                                   const RegressionModel& blur_model,
                                   const RegressionModel& noise_model) {
  EndToEndReport report;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (records[i].label == ArtifactLabel::Blur || records[i].label == ArtifactLabel::Noise) {
      report.record_indices.push_back(i);
    }
  }
  if (report.record_indices.empty()) {
    fail(ErrorKind::InsufficientData, "evaluate: no records labelled blur or noise");
  }

  report.predictions.resize(report.record_indices.size());
  parallel_for(report.record_indices.size(), [&](std::size_t j) {
    report.predictions[j] =
        predict_quality(records[report.record_indices[j]].image, blur_model, noise_model);
  });

  std::vector<double> pred, target, routed;
  for (std::size_t j = 0; j < report.predictions.size(); ++j) {
    const DatasetRecord& r = records[report.record_indices[j]];
    const HybridPrediction& p = report.predictions[j];
    const Artifact truth = r.label == ArtifactLabel::Blur ? Artifact::Blur : Artifact::Noise;
    report.correct += p.artifact == truth;
    report.degenerate += p.degenerate;
    pred.push_back(p.dmos_hat);
    target.push_back(r.dmos);
    routed.push_back(p.model_input);
  }
  report.evaluated = report.predictions.size();
  report.accuracy = static_cast<double>(report.correct) / static_cast<double>(report.evaluated);
  report.metrics = regression_metrics(pred, target);
  report.score_rho = spearman(routed, target);
  report.score_r = pearson(routed, target);
  return report;
}

}  // namespace atrq
