#pragma once

#include <cstdint>

#include "atrq/grid.hpp"

namespace atrq {

/// Directional second-difference maps of one image, their log-compressed
/// versions and the dispersion of each compressed map.
struct CurvatureBundle {
  RealMap c_h;  // [1, -2, 1] along rows
  RealMap c_v;  // [1, -2, 1] along columns
  RealMap l_h;  // ln(1 + |c_h|)
  RealMap l_v;  // ln(1 + |c_v|)
  double sigma_h = 0.0;
  double sigma_v = 0.0;

  std::size_t width() const noexcept { return c_h.width(); }
  std::size_t height() const noexcept { return c_h.height(); }
  std::size_t pixel_count() const noexcept { return c_h.size(); }

  /// Throws InvalidInput if the six members disagree on dimensions.
  void check_consistent() const;
};

struct CurvaturePair {
  RealMap c_h;
  RealMap c_v;
};

/// Borders use clamp-to-edge extension, so outputs have the input's shape.
CurvaturePair compute_curvature(const GrayImage& img);

RealMap log_normalize(const RealMap& c);

/// Population standard deviation (divide by N).
double dispersion(const RealMap& l);

CurvatureBundle analyze(const GrayImage& img);

/// Number of analyze() calls made by this process. Diagnostic only.
std::uint64_t analyze_call_count() noexcept;

}  // namespace atrq
