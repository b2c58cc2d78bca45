#include <benchmark/benchmark.h>

#include <vector>

#include "atrq/pipeline.hpp"
#include "atrq/synth.hpp"

namespace {

atrq::GrayImage scene(std::size_t side) { return atrq::procedural_reference(1, side); }

void BM_Analyze(benchmark::State& state) {
  const auto img = scene(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(atrq::analyze(img));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(img.pixel_count()));
}
BENCHMARK(BM_Analyze)->Arg(128)->Arg(512)->Unit(benchmark::kMicrosecond);

void BM_ScoreBundle(benchmark::State& state) {
  const auto bundle = atrq::analyze(scene(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(atrq::score_bundle(bundle, atrq::kBlurFilter));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(bundle.pixel_count()));
}
BENCHMARK(BM_ScoreBundle)->Arg(128)->Arg(512)->Unit(benchmark::kMicrosecond);

void BM_Signature(benchmark::State& state) {
  const auto img = scene(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(atrq::compute_signature(img));
}
BENCHMARK(BM_Signature)->Arg(128)->Arg(512)->Unit(benchmark::kMicrosecond);

// Full 10 x 10 calibration grid over 20 precomputed 128 px bundles.
void BM_GridSearch(benchmark::State& state) {
  std::vector<atrq::CurvatureBundle> bundles;
  std::vector<double> dmos;
  for (std::uint64_t i = 0; i < 20; ++i) {
    const auto ref = atrq::procedural_reference(i, 128);
    bundles.push_back(atrq::analyze(atrq::gaussian_blur(ref, 0.5 + 0.4 * static_cast<double>(i % 5))));
    dmos.push_back(static_cast<double>(i % 5));
  }
  const auto axis = atrq::default_calibration_axis();
  for (auto _ : state) {
    benchmark::DoNotOptimize(atrq::grid_search_calibrate(bundles, dmos, axis, axis));
  }
}
BENCHMARK(BM_GridSearch)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
