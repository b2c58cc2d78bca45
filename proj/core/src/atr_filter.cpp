#include "atrq/atr_filter.hpp"

#include <cmath>
#include <vector>

namespace atrq {

std::string_view to_string(FilterMode mode) noexcept {
  switch (mode) {
    case FilterMode::Texture: return "texture";
    case FilterMode::Saliency: return "saliency";
    case FilterMode::Boundary: return "boundary";
  }
  return "unknown";
}

FilterParams::FilterParams(double alpha, double beta) : alpha_(alpha), beta_(beta) {
  if (!(std::isfinite(alpha) && alpha > 0.0) || !(std::isfinite(beta) && beta > 0.0)) {
    fail(ErrorKind::InvalidInput, "filter parameters alpha and beta must be positive and finite");
  }
}

FilterMode FilterParams::mode() const noexcept { return classify_mode(*this); }

FilterMode classify_mode(const FilterParams& params) noexcept {
  if (params.alpha() > params.beta()) return FilterMode::Texture;
  if (params.beta() > params.alpha()) return FilterMode::Saliency;
  return FilterMode::Boundary;
}

MaskPair compute_masks(const CurvatureBundle& bundle, const FilterParams& params) {
  bundle.check_consistent();
  const double act_h = params.beta() * bundle.sigma_h;
  const double act_v = params.beta() * bundle.sigma_v;
  const double tol_h = params.alpha() * bundle.sigma_h;
  const double tol_v = params.alpha() * bundle.sigma_v;

  MaskPair m;
  m.m_horz = BoolMap(bundle.width(), bundle.height(), 0);
  m.m_vert = BoolMap(bundle.width(), bundle.height(), 0);
  auto lh = bundle.l_h.values();
  auto lv = bundle.l_v.values();
  auto mh = m.m_horz.values();
  auto mv = m.m_vert.values();
  for (std::size_t i = 0; i < lh.size(); ++i) {
    const bool horz = lv[i] >= act_v && lh[i] < tol_h;
    const bool vert = lh[i] >= act_h && lv[i] < tol_v;
    mh[i] = horz;
    mv[i] = vert;
    m.horz_count += horz;
    m.vert_count += vert;
    m.union_count += horz || vert;
  }
  return m;
}

AtrScore atr_score(const MaskPair& mask, std::size_t width, std::size_t height,
                   const FilterParams& params) {
  if (mask.width() != width || mask.height() != height || !mask.m_horz.same_shape(mask.m_vert)) {
    fail(ErrorKind::InvalidInput, "atr_score: mask dimensions do not match the image");
  }
  if (width * height == 0) fail(ErrorKind::InvalidInput, "atr_score: empty image");
  AtrScore s;
  auto mh = mask.m_horz.values();
  auto mv = mask.m_vert.values();
  for (std::size_t i = 0; i < mh.size(); ++i) s.raw_count += (mh[i] || mv[i]);
  s.pixel_count = width * height;
  s.value = static_cast<double>(s.raw_count) / static_cast<double>(s.pixel_count);
  s.params = params;
  return s;
}

AtrScore score_bundle(const CurvatureBundle& bundle, const FilterParams& params) {
  return atr_score(compute_masks(bundle, params), bundle.width(), bundle.height(), params);
}

namespace {

GrayImage render(const BoolMap& m) {
  std::vector<double> px(m.size());
  auto src = m.values();
  for (std::size_t i = 0; i < px.size(); ++i) px[i] = src[i] ? 255.0 : 0.0;
  return GrayImage(m.width(), m.height(), std::move(px));
}

}  // namespace

SaliencyArtifacts saliency_artifacts(const GrayImage& img, const MaskPair& mask) {
  if (!mask.m_horz.same_shape(img.pixels()) || !mask.m_vert.same_shape(img.pixels())) {
    fail(ErrorKind::InvalidInput, "saliency_artifacts: mask and image dimensions differ");
  }
  BoolMap both(img.width(), img.height(), 0);
  RgbImage overlay(img.width(), img.height());
  auto mh = mask.m_horz.values();
  auto mv = mask.m_vert.values();
  auto src = img.pixels().values();
  auto u = both.values();
  auto ov = overlay.values();
  for (std::size_t i = 0; i < src.size(); ++i) {
    u[i] = mh[i] || mv[i];
    if (mh[i] && mv[i]) {
      ov[i] = kBothHighlight;
    } else if (mh[i]) {
      ov[i] = kHorzHighlight;
    } else if (mv[i]) {
      ov[i] = kVertHighlight;
    } else {
      const auto g = static_cast<std::uint8_t>(std::lround(src[i]));
      ov[i] = {g, g, g};
    }
  }
  return {render(mask.m_horz), render(mask.m_vert), render(both), std::move(overlay)};
}

}  // namespace atrq
