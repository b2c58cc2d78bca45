#include "atrq/report.hpp"

#include "atrq/version.hpp"

namespace atrq {

void to_json(Json& j, const FilterParams& p) {
  j = Json{{"alpha", p.alpha()}, {"beta", p.beta()}, {"mode", to_string(p.mode())}};
}

void to_json(Json& j, const AtrScore& s) {
  j = Json{{"value", s.value},
           {"raw_count", s.raw_count},
           {"pixel_count", s.pixel_count},
           {"params", s.params},
           {"degenerate", s.is_zero()}};
}

void to_json(Json& j, const Signature& s) {
  j = Json{{"atr_blur", s.atr_blur}, {"atr_noise", s.atr_noise}};
}

void to_json(Json& j, const MetricReport& m) {
  j = Json{{"spearman_rho", m.spearman_rho}, {"pearson_r", m.pearson_r},
           {"r_squared", m.r_squared},       {"rmse", m.rmse},
           {"mae", m.mae},                   {"rmse_pct", m.rmse_pct},
           {"mae_pct", m.mae_pct}};
}

void to_json(Json& j, const MeanSd& m) { j = Json{{"mean", m.mean}, {"sd", m.sd}}; }

void to_json(Json& j, const RegressionModel& m) {
  j = Json{{"artifact", to_string(m.artifact)},
           {"c", m.c},
           {"b1", m.b1},
           {"b2", m.b2},
           {"feature", to_string(m.feature)},
           {"samples", m.sample_size},
           {"id", m.id()}};
}

void to_json(Json& j, const HybridPrediction& p) {
  j = Json{{"artifact", to_string(p.artifact)},
           {"dmos_hat", p.dmos_hat},
           {"signature", p.signature},
           {"model_used", p.model_used},
           {"model_input", p.model_input},
           {"degenerate", p.degenerate}};
}

void to_json(Json& j, const CalibrationResult& c) {
  Json grid = Json::array();
  for (const auto& cell : c.grid) {
    grid.push_back({{"alpha", cell.params.alpha()},
                    {"beta", cell.params.beta()},
                    {"rho", cell.rho},
                    {"degenerate", cell.degenerate}});
  }
  j = Json{{"best_params", c.best_params},
           {"best_rho", c.best_rho},
           {"best_abs_rho", c.best_abs_rho},
           {"grid", std::move(grid)}};
}

void to_json(Json& j, const CvReport& r) {
  Json folds = Json::array();
  for (const auto& f : r.folds) {
    folds.push_back({{"test_indices", f.test_indices},
                     {"test_groups", f.test_groups},
                     {"model", f.model},
                     {"metrics", f.metrics},
                     {"score_rho", f.score_rho},
                     {"score_r", f.score_r},
                     {"train_excluded", f.train_excluded}});
  }
  const CvSummary& s = r.summary;
  j = Json{{"k", r.k},
           {"seed", r.seed},
           {"artifact", to_string(r.artifact)},
           {"feature", to_string(r.feature)},
           {"clamped", r.clamped},
           {"fold_of", r.fold_of},
           {"folds", std::move(folds)},
           {"summary",
            {{"spearman_rho", s.spearman_rho},
             {"pearson_r", s.pearson_r},
             {"r_squared", s.r_squared},
             {"rmse", s.rmse},
             {"mae", s.mae},
             {"rmse_pct", s.rmse_pct},
             {"mae_pct", s.mae_pct},
             {"score_rho", s.score_rho},
             {"score_r", s.score_r}}}};
}

void to_json(Json& j, const EndToEndReport& r) {
  j = Json{{"metrics", r.metrics},      {"score_rho", r.score_rho},
           {"score_r", r.score_r},      {"accuracy", r.accuracy},
           {"evaluated", r.evaluated},  {"correct", r.correct},
           {"degenerate", r.degenerate}};
}

Json make_report(std::string_view command, Json parameters, Json payload) {
  return Json{{"tool", "atrq"},
              {"version", kVersion},
              {"command", command},
              {"parameters", std::move(parameters)},
              {"payload", std::move(payload)}};
}

std::string dump_report(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace atrq
