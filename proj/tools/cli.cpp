#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fmt/format.h>
#include <fstream>
#include <functional>
#include <ostream>
#include <optional>

#include "atrq/atr_filter.hpp"
#include "atrq/curvature.hpp"
#include "atrq/error.hpp"
#include "atrq/image_io.hpp"
#include "atrq/manifest.hpp"
#include "atrq/model_file.hpp"
#include "atrq/pipeline.hpp"
#include "atrq/regression.hpp"
#include "atrq/report.hpp"
#include "atrq/synth.hpp"
#include "atrq/version.hpp"

namespace atrq::cli {
namespace {

namespace fs = std::filesystem;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "table";
  std::string out;
  std::vector<std::string> images;
  std::optional<double> alpha;
  std::optional<double> beta;
  std::vector<std::string> models;
  std::string manifest;
  std::size_t k = 5;
  std::uint64_t seed = 0;
  std::string grid_alpha;
  std::string grid_beta;
  std::string artifact;
  std::string feature = "fraction";
  std::vector<std::string> references;
  std::size_t procedural = 0;
  std::size_t size = 128;
  std::string blur_ladder;
  std::string noise_ladder;
  bool no_reference = false;
  std::string fit_date;
};

double parse_number(std::string_view text) {
  double v = 0.0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc() || ptr != end || !std::isfinite(v)) {
    throw UsageError(fmt::format("'{}' is not a number", text));
  }
  return v;
}

// "a,b,c" or "start:stop:step" (inclusive of stop).
std::vector<double> parse_axis(const std::string& text) {
  std::vector<double> values;
  if (text.find(':') != std::string::npos) {
    std::vector<double> parts;
    std::size_t start = 0;
    while (true) {
      const auto colon = text.find(':', start);
      parts.push_back(parse_number(std::string_view(text).substr(start, colon - start)));
      if (colon == std::string::npos) break;
      start = colon + 1;
    }
    if (parts.size() != 3 || parts[2] <= 0.0 || parts[1] < parts[0]) {
      throw UsageError(fmt::format("range '{}' must be start:stop:step with step > 0", text));
    }
    const auto steps = static_cast<long>(std::floor((parts[1] - parts[0]) / parts[2] + 1e-9));
    for (long i = 0; i <= steps; ++i) values.push_back(parts[0] + static_cast<double>(i) * parts[2]);
    return values;
  }
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    values.push_back(parse_number(std::string_view(text).substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return values;
}

class Emitter {
 public:
  Emitter(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {}

  bool doc() const { return opt_.format == "doc"; }

  // Writes the document to stdout (doc format) and/or to --out when the
  // command uses --out as a document path.
  void finish(std::string_view command, Json parameters, Json payload, bool out_is_doc_path) {
    const std::string text = dump_report(make_report(command, std::move(parameters), std::move(payload)));
    if (doc()) out_ << text;
    if (out_is_doc_path && !opt_.out.empty()) {
      std::ofstream f(opt_.out, std::ios::binary);
      if (!f) fail(ErrorKind::Io, fmt::format("cannot write '{}'", opt_.out));
      f << text;
    }
  }

  template <typename... Args>
  void table(fmt::format_string<Args...> f, Args&&... args) {
    if (!doc()) out_ << fmt::format(f, std::forward<Args>(args)...);
  }

 private:
  const Options& opt_;
  std::ostream& out_;
};

std::pair<RegressionModel, RegressionModel> resolve_models(const std::vector<std::string>& paths) {
  std::optional<RegressionModel> blur, noise;
  for (const auto& p : paths) {
    RegressionModel m = load_model(p);
    auto& slot = m.artifact == Artifact::Blur ? blur : noise;
    if (slot) throw UsageError(fmt::format("more than one {} model given", to_string(m.artifact)));
    slot = std::move(m);
  }
  return {blur.value_or(bundled_blur_model()), noise.value_or(bundled_noise_model())};
}

std::vector<DatasetRecord> load_records(const Options& opt, bool distorted_only) {
  auto manifest = load_manifest(opt.manifest);
  std::vector<ManifestRecord> kept;
  std::optional<ArtifactLabel> want;
  if (!opt.artifact.empty()) {
    want = parse_artifact(opt.artifact) == Artifact::Blur ? ArtifactLabel::Blur : ArtifactLabel::Noise;
  }
  for (auto& m : manifest) {
    if (want && m.artifact_label != *want) continue;
    if (distorted_only && m.artifact_label != ArtifactLabel::Blur &&
        m.artifact_label != ArtifactLabel::Noise) {
      continue;
    }
    kept.push_back(std::move(m));
  }
  return load_dataset(kept);
}

Json model_json(const RegressionModel& m) { return Json(m); }

// ---------------------------------------------------------------------------

void cmd_score(const Options& opt, Emitter& em) {
  const FilterParams params(opt.alpha.value_or(4.0), opt.beta.value_or(2.5));
  Json rows = Json::array();
  em.table("{:<40} {:>6} {:>6} {:>9} {:>12} {:>10}  {}\n", "image", "alpha", "beta", "mode", "atr",
           "count", "flag");
  for (const auto& path : opt.images) {
    const AtrScore s = score_bundle(analyze(load_image_grayscale(path)), params);
    rows.push_back({{"image", path}, {"score", s}});
    em.table("{:<40} {:>6} {:>6} {:>9} {:>12.8f} {:>10}  {}\n", path, params.alpha(),
             params.beta(), to_string(params.mode()), s.value, s.raw_count,
             s.is_zero() ? "degenerate" : "");
  }
  em.finish("score", {{"alpha", params.alpha()}, {"beta", params.beta()}}, {{"rows", rows}}, true);
}

void cmd_signature(const Options& opt, Emitter& em) {
  Json rows = Json::array();
  em.table("{:<40} {:>12} {:>12}  {}\n", "image", "atr_blur", "atr_noise", "class");
  for (const auto& path : opt.images) {
    const Signature sig = compute_signature(load_image_grayscale(path));
    const Artifact a = classify_artifact(sig);
    rows.push_back({{"image", path}, {"signature", sig}, {"class", to_string(a)}});
    em.table("{:<40} {:>12.8f} {:>12.8f}  {}\n", path, sig.atr_blur.value, sig.atr_noise.value,
             to_string(a));
  }
  em.finish("signature", {{"blur_filter", kBlurFilter}, {"noise_filter", kNoiseFilter}},
            {{"rows", rows}}, true);
}

void cmd_classify(const Options& opt, Emitter& em) {
  Json rows = Json::array();
  for (const auto& path : opt.images) {
    const Signature sig = compute_signature(load_image_grayscale(path));
    const Artifact a = classify_artifact(sig);
    rows.push_back({{"image", path}, {"signature", sig}, {"class", to_string(a)}});
    if (opt.images.size() == 1) {
      em.table("{}\n", to_string(a));
    } else {
      em.table("{}\t{}\n", path, to_string(a));
    }
  }
  em.finish("classify", Json::object(), {{"rows", rows}}, true);
}

void cmd_predict(const Options& opt, Emitter& em) {
  const auto [blur, noise] = resolve_models(opt.models);
  Json rows = Json::array();
  em.table("{:<40} {:>6} {:>12} {:>14}  {}\n", "image", "class", "dmos_hat", "model_input", "flag");
  for (const auto& path : opt.images) {
    const HybridPrediction p = predict_quality(load_image_grayscale(path), blur, noise);
    rows.push_back({{"image", path}, {"prediction", p}});
    em.table("{:<40} {:>6} {:>12.6f} {:>14.8g}  {}\n", path, to_string(p.artifact), p.dmos_hat,
             p.model_input, p.degenerate ? "degenerate" : "");
  }
  em.finish("predict", {{"blur_model", model_json(blur)}, {"noise_model", model_json(noise)}},
            {{"rows", rows}}, true);
}

void cmd_calibrate(const Options& opt, Emitter& em) {
  const auto alphas = opt.grid_alpha.empty() ? default_calibration_axis() : parse_axis(opt.grid_alpha);
  const auto betas = opt.grid_beta.empty() ? default_calibration_axis() : parse_axis(opt.grid_beta);
  const auto records = load_records(opt, true);
  const CalibrationResult r = grid_search_calibrate(records, alphas, betas);

  em.table("records: {}   grid: {} x {}\n", records.size(), alphas.size(), betas.size());
  em.table("{:>6} {:>6} {:>10}\n", "alpha", "beta", "rho");
  for (const auto& cell : r.grid) {
    em.table("{:>6} {:>6} {:>10}\n", cell.params.alpha(), cell.params.beta(),
             cell.degenerate ? std::string("undefined") : fmt::format("{:.6f}", cell.rho));
  }
  em.table("best: alpha={} beta={} rho={:.6f} |rho|={:.6f} ({})\n", r.best_params.alpha(),
           r.best_params.beta(), r.best_rho, r.best_abs_rho, to_string(r.best_params.mode()));
  em.finish("calibrate",
            {{"manifest", opt.manifest},
             {"artifact", opt.artifact.empty() ? "all" : opt.artifact},
             {"grid_alpha", alphas},
             {"grid_beta", betas},
             {"records", records.size()}},
            r, true);
}

void cmd_crossval(const Options& opt, Emitter& em) {
  const FilterParams params(opt.alpha.value_or(4.0), opt.beta.value_or(2.5));
  const Artifact artifact = parse_artifact(opt.artifact.empty() ? "blur" : opt.artifact);
  const AtrFeature feature = parse_feature(opt.feature);
  Options filtered = opt;
  filtered.artifact = std::string(to_string(artifact));
  const auto records = load_records(filtered, true);
  const CvReport r = kfold_cross_validate(records, opt.k, params, artifact, opt.seed, feature);

  em.table("{}-fold grouped cross-validation, {} records, {} ({}, {})\n", r.k, records.size(),
           to_string(artifact), params.alpha(), params.beta());
  em.table("{:>5} {:>6} {:>10} {:>10} {:>10} {:>10} {:>10}\n", "fold", "n", "score_rho", "score_r",
           "R2", "RMSE", "MAE");
  for (std::size_t f = 0; f < r.folds.size(); ++f) {
    const auto& fold = r.folds[f];
    em.table("{:>5} {:>6} {:>10.4f} {:>10.4f} {:>10.4f} {:>10.4f} {:>10.4f}\n", f,
             fold.test_indices.size(), fold.score_rho, fold.score_r, fold.metrics.r_squared,
             fold.metrics.rmse, fold.metrics.mae);
  }
  const auto& s = r.summary;
  em.table("mean+-sd  score_rho {:.4f}+-{:.4f}  score_r {:.4f}+-{:.4f}  RMSE {:.4f}+-{:.4f} ({:.2f}%)"
           "  MAE {:.4f}+-{:.4f} ({:.2f}%)\n",
           s.score_rho.mean, s.score_rho.sd, s.score_r.mean, s.score_r.sd, s.rmse.mean, s.rmse.sd,
           s.rmse_pct.mean, s.mae.mean, s.mae.sd, s.mae_pct.mean);
  em.finish("crossval",
            {{"manifest", opt.manifest},
             {"params", params},
             {"artifact", to_string(artifact)},
             {"feature", to_string(feature)},
             {"k", opt.k},
             {"seed", opt.seed}},
            r, true);
}

void cmd_evaluate(const Options& opt, Emitter& em) {
  const auto [blur, noise] = resolve_models(opt.models);
  const auto records = load_records(opt, true);
  const EndToEndReport r = evaluate_end_to_end(records, blur, noise);

  Json rows = Json::array();
  for (std::size_t j = 0; j < r.predictions.size(); ++j) {
    const auto& rec = records[r.record_indices[j]];
    rows.push_back({{"image", rec.source},
                    {"label", to_string(rec.label)},
                    {"dmos", rec.dmos},
                    {"prediction", r.predictions[j]}});
  }
  em.table("evaluated {} records, classification accuracy {:.4f} ({}/{})\n", r.evaluated,
           r.accuracy, r.correct, r.evaluated);
  em.table("score rho {:.4f}   score r {:.4f}\n", r.score_rho, r.score_r);
  em.table("R2 {:.4f}   RMSE {:.4f} ({:.2f}%)   MAE {:.4f} ({:.2f}%)   pred rho {:.4f}\n",
           r.metrics.r_squared, r.metrics.rmse, r.metrics.rmse_pct, r.metrics.mae,
           r.metrics.mae_pct, r.metrics.spearman_rho);
  if (r.degenerate > 0) em.table("{} records had zero ATR and were clamped\n", r.degenerate);
  Json payload = r;
  payload["rows"] = std::move(rows);
  em.finish("evaluate",
            {{"manifest", opt.manifest}, {"blur_model", model_json(blur)}, {"noise_model", model_json(noise)}},
            std::move(payload), true);
}

void cmd_fit(const Options& opt, Emitter& em) {
  const FilterParams params(opt.alpha.value_or(4.0), opt.beta.value_or(2.5));
  const Artifact artifact = parse_artifact(opt.artifact.empty() ? "blur" : opt.artifact);
  const AtrFeature feature = parse_feature(opt.feature);
  Options filtered = opt;
  filtered.artifact = std::string(to_string(artifact));
  const auto records = load_records(filtered, true);
  std::vector<double> x, y;
  for (const auto& rec : records) {
    x.push_back(model_input(score_bundle(analyze(rec.image), params), feature));
    y.push_back(rec.dmos);
  }
  RegressionModel model = fit_loglog_poly2(x, y, artifact, feature);
  if (!opt.fit_date.empty()) {
    model.fit_date = opt.fit_date;
  } else {
    const auto today = std::chrono::floor<std::chrono::days>(std::chrono::system_clock::now());
    const std::chrono::year_month_day ymd{today};
    model.fit_date = fmt::format("{:04}-{:02}-{:02}", static_cast<int>(ymd.year()),
                                 static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
  }
  const MetricReport m = evaluate_fit(model, x, y);
  if (!opt.out.empty()) save_model(model, opt.out);

  em.table("{} model on {} records: c={} b1={} b2={} ({})\n", to_string(artifact), model.sample_size,
           model.c, model.b1, model.b2, to_string(feature));
  em.table("R2 {:.4f}   RMSE {:.4f} ({:.2f}%)   MAE {:.4f}\n", m.r_squared, m.rmse, m.rmse_pct, m.mae);
  em.finish("fit",
            {{"manifest", opt.manifest}, {"params", params}, {"artifact", to_string(artifact)},
             {"feature", to_string(feature)}},
            {{"model", model}, {"metrics", m}}, false);
}

void cmd_saliency(const Options& opt, Emitter& em) {
  if (opt.out.empty()) throw UsageError("saliency requires --out DIR");
  const FilterParams params(opt.alpha.value_or(1.0), opt.beta.value_or(3.5));
  std::error_code ec;
  fs::create_directories(opt.out, ec);
  if (ec) fail(ErrorKind::Io, fmt::format("cannot create '{}': {}", opt.out, ec.message()));

  Json rows = Json::array();
  for (const auto& path : opt.images) {
    const GrayImage img = load_image_grayscale(path);
    const MaskPair masks = compute_masks(analyze(img), params);
    const AtrScore score = atr_score(masks, img.width(), img.height(), params);
    const SaliencyArtifacts art = saliency_artifacts(img, masks);
    const std::string stem = fs::path(path).stem().string();
    const fs::path dir(opt.out);
    const Json files = {{"horz", (dir / (stem + "_horz.png")).string()},
                        {"vert", (dir / (stem + "_vert.png")).string()},
                        {"union", (dir / (stem + "_union.png")).string()},
                        {"overlay", (dir / (stem + "_overlay.png")).string()}};
    save_png(art.horz, files["horz"].get<std::string>());
    save_png(art.vert, files["vert"].get<std::string>());
    save_png(art.combined, files["union"].get<std::string>());
    save_png(art.overlay, files["overlay"].get<std::string>());
    rows.push_back({{"image", path},
                    {"horz_count", masks.horz_count},
                    {"vert_count", masks.vert_count},
                    {"union_count", masks.union_count},
                    {"score", score},
                    {"files", files}});
    em.table("{}: mode {}  horz {}  vert {}  union {}  atr {:.6f} -> {}\n", path,
             to_string(params.mode()), masks.horz_count, masks.vert_count, masks.union_count,
             score.value, files["overlay"].get<std::string>());
  }
  em.finish("saliency", {{"params", params}, {"out", opt.out}}, {{"rows", rows}}, false);
}

void cmd_synth(const Options& opt, Emitter& em) {
  if (opt.out.empty()) throw UsageError("synth requires --out DIR");
  LadderSpec spec;
  if (!opt.blur_ladder.empty()) spec.blur_sigmas = parse_axis(opt.blur_ladder);
  if (!opt.noise_ladder.empty()) spec.noise_sigmas = parse_axis(opt.noise_ladder);
  spec.include_reference = !opt.no_reference;
  spec.seed = opt.seed;

  std::vector<DatasetRecord> refs;
  for (const auto& path : opt.references) {
    refs.push_back({path, load_image_grayscale(path), 0.0, ArtifactLabel::Reference,
                    fs::path(path).stem().string()});
  }
  const std::size_t procedural = opt.procedural == 0 && refs.empty() ? 5 : opt.procedural;
  for (std::size_t i = 0; i < procedural; ++i) {
    refs.push_back({fmt::format("procedural:{}", opt.seed + i), procedural_reference(opt.seed + i, opt.size),
                    0.0, ArtifactLabel::Reference, fmt::format("proc{:02}", i)});
  }
  const auto items = synthesize(refs, spec);
  const auto rows = write_synthetic_dataset(items, opt.out);

  Json listing = Json::array();
  for (const auto& r : rows) {
    listing.push_back({{"image_path", r.image_path.generic_string()},
                       {"dmos", r.dmos},
                       {"artifact_label", to_string(r.artifact_label)},
                       {"ref_id", r.ref_id}});
  }
  em.table("wrote {} images from {} references to {}\n", rows.size(), refs.size(), opt.out);
  em.table("manifest: {}\n", (fs::path(opt.out) / "manifest.csv").string());
  em.finish("synth",
            {{"out", opt.out},
             {"seed", opt.seed},
             {"size", opt.size},
             {"references", opt.references},
             {"procedural", procedural},
             {"blur_ladder", spec.blur_sigmas},
             {"noise_ladder", spec.noise_sigmas},
             {"include_reference", spec.include_reference}},
            {{"records", listing}}, false);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"atrq: directional-curvature image quality toolkit", "atrq"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "Output: human table or machine document")
        ->check(CLI::IsMember({"table", "doc"}));
  };
  auto add_images = [&](CLI::App* sub) {
    sub->add_option("images", opt.images, "Input images (PNG/BMP/JPEG)")->required();
  };
  // Defaults differ per subcommand, so they are applied by the handlers.
  auto add_params = [&](CLI::App* sub, double alpha, double beta) {
    sub->add_option("--alpha", opt.alpha, fmt::format("Tolerance multiplier (default {})", alpha));
    sub->add_option("--beta", opt.beta, fmt::format("Activation multiplier (default {})", beta));
  };

  std::map<CLI::App*, std::function<void(const Options&, Emitter&)>> handlers;

  auto* score = app.add_subcommand("score", "ATR score of images for one (alpha, beta)");
  add_images(score);
  add_format(score);
  add_params(score, 4.0, 2.5);
  score->add_option("--out", opt.out, "Also write the report document here");
  handlers[score] = cmd_score;

  auto* signature = app.add_subcommand("signature", "ATR under the blur and noise specialist filters");
  add_images(signature);
  add_format(signature);
  signature->add_option("--out", opt.out, "Also write the report document here");
  handlers[signature] = cmd_signature;

  auto* classify = app.add_subcommand("classify", "Dominant artifact (blur or noise)");
  add_images(classify);
  add_format(classify);
  classify->add_option("--out", opt.out, "Also write the report document here");
  handlers[classify] = cmd_classify;

  auto* predict = app.add_subcommand("predict", "Hybrid DMOS prediction");
  add_images(predict);
  add_format(predict);
  predict->add_option("--model", opt.models, "Model file (repeatable; bundled defaults otherwise)");
  predict->add_option("--out", opt.out, "Also write the report document here");
  handlers[predict] = cmd_predict;

  auto* calibrate = app.add_subcommand("calibrate", "Grid search of (alpha, beta) maximising |rho|");
  add_format(calibrate);
  calibrate->add_option("--manifest", opt.manifest, "Dataset manifest")->required();
  calibrate->add_option("--grid-alpha", opt.grid_alpha, "Alpha values: a,b,c or start:stop:step");
  calibrate->add_option("--grid-beta", opt.grid_beta, "Beta values: a,b,c or start:stop:step");
  calibrate->add_option("--artifact", opt.artifact, "Restrict to blur or noise records");
  calibrate->add_option("--out", opt.out, "Also write the report document here");
  handlers[calibrate] = cmd_calibrate;

  auto* crossval = app.add_subcommand("crossval", "Grouped K-fold cross-validation");
  add_format(crossval);
  crossval->add_option("--manifest", opt.manifest, "Dataset manifest")->required();
  add_params(crossval, 4.0, 2.5);
  crossval->add_option("--k", opt.k, "Fold count")->default_val(5);
  crossval->add_option("--seed", opt.seed, "Fold shuffling seed")->default_val(0);
  crossval->add_option("--artifact", opt.artifact, "blur or noise (default blur)");
  crossval->add_option("--feature", opt.feature, "fraction or count")->default_val("fraction");
  crossval->add_option("--out", opt.out, "Also write the report document here");
  handlers[crossval] = cmd_crossval;

  auto* evaluate = app.add_subcommand("evaluate", "End-to-end classify-then-quantify evaluation");
  add_format(evaluate);
  evaluate->add_option("--manifest", opt.manifest, "Dataset manifest")->required();
  evaluate->add_option("--model", opt.models, "Model file (repeatable; bundled defaults otherwise)");
  evaluate->add_option("--out", opt.out, "Also write the report document here");
  handlers[evaluate] = cmd_evaluate;

  auto* fit = app.add_subcommand("fit", "Fit a specialist model and write it as a model file");
  add_format(fit);
  fit->add_option("--manifest", opt.manifest, "Dataset manifest")->required();
  add_params(fit, 4.0, 2.5);
  fit->add_option("--artifact", opt.artifact, "blur or noise (default blur)");
  fit->add_option("--feature", opt.feature, "fraction or count")->default_val("fraction");
  fit->add_option("--fit-date", opt.fit_date, "Date recorded in the model file (default today)");
  fit->add_option("--out", opt.out, "Model file to write");
  handlers[fit] = cmd_fit;

  auto* saliency = app.add_subcommand("saliency", "Write orientation masks and overlays");
  add_images(saliency);
  add_format(saliency);
  add_params(saliency, 1.0, 3.5);
  saliency->add_option("--out", opt.out, "Output directory")->required();
  handlers[saliency] = cmd_saliency;

  auto* synth = app.add_subcommand("synth", "Generate a degraded dataset and its manifest");
  add_format(synth);
  synth->add_option("--out", opt.out, "Output directory")->required();
  synth->add_option("--reference", opt.references, "Reference images (repeatable)");
  synth->add_option("--procedural", opt.procedural, "Number of procedural references");
  synth->add_option("--size", opt.size, "Side of procedural references")->default_val(128);
  synth->add_option("--blur-ladder", opt.blur_ladder, "Blur sigmas (default 0.5,1,2,4,8)");
  synth->add_option("--noise-ladder", opt.noise_ladder, "Noise sigmas (default 2,5,10,20,40)");
  synth->add_option("--seed", opt.seed, "Noise and procedural seed")->default_val(0);
  synth->add_flag("--no-reference", opt.no_reference, "Do not list references in the manifest");
  handlers[synth] = cmd_synth;

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    // Help and version requests arrive as "successful" parse errors.
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  Emitter emitter(opt, out);
  try {
    handlers.at(chosen)(opt, emitter);
  } catch (const UsageError& e) {
    err << "atrq " << chosen->get_name() << ": " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "atrq " << chosen->get_name() << ": " << to_string(e.kind()) << " error: " << e.what()
        << "\n";
    return e.kind() == ErrorKind::Io ? kIo : kDomain;
  } catch (const std::exception& e) {
    err << "atrq " << chosen->get_name() << ": internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kSuccess;
}

}  // namespace atrq::cli
