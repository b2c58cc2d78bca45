#include "atrq/grid.hpp"

#include <cmath>
#include <string>

namespace atrq {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::Degenerate: return "degenerate-input";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::InsufficientData: return "insufficient-data";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

GrayImage::GrayImage(std::size_t width, std::size_t height, std::vector<double> data)
    : GrayImage(RealMap(width, height, std::move(data))) {}

GrayImage::GrayImage(RealMap pixels) : pixels_(std::move(pixels)) {
  if (pixels_.width() < kMinSide || pixels_.height() < kMinSide) {
    fail(ErrorKind::InvalidInput,
         "image must be at least 3x3, got " + std::to_string(pixels_.width()) + "x" +
             std::to_string(pixels_.height()));
  }
  for (double v : pixels_.values()) {
    if (!std::isfinite(v) || v < kMinValue || v > kMaxValue) {
      fail(ErrorKind::InvalidInput, "image samples must be finite and within [0, 255]");
    }
  }
}

GrayImage transpose(const GrayImage& img) { return GrayImage(transpose(img.pixels())); }

}  // namespace atrq
