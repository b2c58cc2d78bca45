#pragma once

#include <cstddef>
#include <string_view>

#include "atrq/curvature.hpp"
#include "atrq/grid.hpp"

namespace atrq {

enum class FilterMode {
  Texture,   // alpha > beta: permissive purity, dense masks
  Saliency,  // beta > alpha: strict purity, sparse masks
  Boundary,  // alpha == beta; treated as Texture downstream
};

std::string_view to_string(FilterMode mode) noexcept;

/// Dual-threshold configuration. alpha scales the orthogonal-direction
/// tolerance, beta the principal-direction activation level.
class FilterParams {
 public:
  FilterParams(double alpha, double beta);

  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }
  FilterMode mode() const noexcept;

  friend bool operator==(const FilterParams&, const FilterParams&) = default;
  friend auto operator<=>(const FilterParams&, const FilterParams&) = default;

 private:
  double alpha_;
  double beta_;
};

FilterMode classify_mode(const FilterParams& params) noexcept;

struct MaskPair {
  BoolMap m_horz;  // strong vertical curvature, weak horizontal curvature
  BoolMap m_vert;  // strong horizontal curvature, weak vertical curvature
  std::size_t horz_count = 0;
  std::size_t vert_count = 0;
  std::size_t union_count = 0;

  std::size_t width() const noexcept { return m_horz.width(); }
  std::size_t height() const noexcept { return m_horz.height(); }
};

struct AtrScore {
  double value = 0.0;          // fraction of pixels in m_horz | m_vert
  std::size_t raw_count = 0;   // |m_horz | m_vert|
  std::size_t pixel_count = 0;
  FilterParams params{1.0, 1.0};

  bool is_zero() const noexcept { return raw_count == 0; }
};

MaskPair compute_masks(const CurvatureBundle& bundle, const FilterParams& params);

AtrScore atr_score(const MaskPair& mask, std::size_t width, std::size_t height,
                   const FilterParams& params);

/// Convenience: masks then score for one bundle.
AtrScore score_bundle(const CurvatureBundle& bundle, const FilterParams& params);

/// Renderable views of a mask pair.
struct SaliencyArtifacts {
  GrayImage horz;     // 255 where m_horz, else 0
  GrayImage vert;     // 255 where m_vert, else 0
  GrayImage combined; // 255 where m_horz | m_vert
  RgbImage overlay;   // source as gray, mask pixels painted in highlight colours
};

inline constexpr Rgb kHorzHighlight{255, 0, 0};
inline constexpr Rgb kVertHighlight{0, 96, 255};
inline constexpr Rgb kBothHighlight{255, 255, 0};

SaliencyArtifacts saliency_artifacts(const GrayImage& img, const MaskPair& mask);

}  // namespace atrq
