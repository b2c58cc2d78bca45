#include "atrq/curvature.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <vector>

namespace atrq {
namespace {

std::atomic<std::uint64_t> g_analyze_calls{0};

}  // namespace

void CurvatureBundle::check_consistent() const {
  if (!c_h.same_shape(c_v) || !c_h.same_shape(l_h) || !c_h.same_shape(l_v)) {
    fail(ErrorKind::InvalidInput, "curvature bundle maps have mismatched dimensions");
  }
}

CurvaturePair compute_curvature(const GrayImage& img) {
  const std::size_t w = img.width();
  const std::size_t h = img.height();
  const RealMap& px = img.pixels();
  RealMap c_h(w, h);
  RealMap c_v(w, h);

  for (std::size_t y = 0; y < h; ++y) {
    const std::size_t up = y == 0 ? 0 : y - 1;
    const std::size_t down = std::min(y + 1, h - 1);
    for (std::size_t x = 0; x < w; ++x) {
      const std::size_t left = x == 0 ? 0 : x - 1;
      const std::size_t right = std::min(x + 1, w - 1);
      const double centre = px(x, y);
      c_h(x, y) = px(left, y) - 2.0 * centre + px(right, y);
      c_v(x, y) = px(x, up) - 2.0 * centre + px(x, down);
    }
  }
  return {std::move(c_h), std::move(c_v)};
}

RealMap log_normalize(const RealMap& c) {
  RealMap out(c.width(), c.height());
  auto src = c.values();
  auto dst = out.values();
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (!std::isfinite(src[i])) {
      fail(ErrorKind::InvalidInput, "log_normalize: non-finite curvature value");
    }
    dst[i] = std::log1p(std::abs(src[i]));
  }
  return out;
}

double dispersion(const RealMap& l) {
  if (l.empty()) fail(ErrorKind::InvalidInput, "dispersion of an empty map");
  // Summing in sorted order makes the result independent of pixel layout, so
  // a transposed image reproduces the swapped statistics bit for bit.
  std::vector<double> v(l.values().begin(), l.values().end());
  std::sort(v.begin(), v.end());
  if (v.front() == v.back()) return 0.0;
  const auto n = static_cast<double>(v.size());
  double sum = 0.0;
  for (double x : v) sum += x;
  const double mean = sum / n;
  double ss = 0.0;
  for (double x : v) ss += (x - mean) * (x - mean);
  return std::sqrt(ss / n);
}

CurvatureBundle analyze(const GrayImage& img) {
  g_analyze_calls.fetch_add(1, std::memory_order_relaxed);
  auto [c_h, c_v] = compute_curvature(img);
  CurvatureBundle b;
  b.l_h = log_normalize(c_h);
  b.l_v = log_normalize(c_v);
  b.sigma_h = dispersion(b.l_h);
  b.sigma_v = dispersion(b.l_v);
  b.c_h = std::move(c_h);
  b.c_v = std::move(c_v);
  return b;
}

std::uint64_t analyze_call_count() noexcept {
  return g_analyze_calls.load(std::memory_order_relaxed);
}

}  // namespace atrq
