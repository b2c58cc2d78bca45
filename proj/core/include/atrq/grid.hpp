#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "atrq/error.hpp"

namespace atrq {

/// Dense row-major 2D array. Element (x, y) lives at data[y * width + x].
template <typename T>
class Grid {
 public:
  Grid() = default;
  Grid(std::size_t width, std::size_t height, T fill = T{})
      : width_(width), height_(height), data_(width * height, fill) {}
  Grid(std::size_t width, std::size_t height, std::vector<T> data)
      : width_(width), height_(height), data_(std::move(data)) {
    if (data_.size() != width_ * height_) {
      fail(ErrorKind::InvalidInput, "grid data length does not match width * height");
    }
  }

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }

  T& operator()(std::size_t x, std::size_t y) { return data_[y * width_ + x]; }
  const T& operator()(std::size_t x, std::size_t y) const { return data_[y * width_ + x]; }

  std::span<T> values() noexcept { return data_; }
  std::span<const T> values() const noexcept { return data_; }

  std::span<T> row(std::size_t y) { return {data_.data() + y * width_, width_}; }
  std::span<const T> row(std::size_t y) const { return {data_.data() + y * width_, width_}; }

  bool same_shape(const auto& other) const noexcept {
    return width_ == other.width() && height_ == other.height();
  }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  std::size_t width_ = 0;
  std::size_t height_ = 0;
  std::vector<T> data_;
};

using RealMap = Grid<double>;
/// uint8_t rather than bool so that rows are addressable spans.
using BoolMap = Grid<std::uint8_t>;

template <typename T>
Grid<T> transpose(const Grid<T>& g) {
  Grid<T> out(g.height(), g.width());
  for (std::size_t y = 0; y < g.height(); ++y) {
    for (std::size_t x = 0; x < g.width(); ++x) out(y, x) = g(x, y);
  }
  return out;
}

/// Validated grayscale image: at least 3x3, every sample finite and in [0, 255].
class GrayImage {
 public:
  static constexpr double kMinValue = 0.0;
  static constexpr double kMaxValue = 255.0;
  static constexpr std::size_t kMinSide = 3;

  GrayImage(std::size_t width, std::size_t height, std::vector<double> data);
  explicit GrayImage(RealMap pixels);

  std::size_t width() const noexcept { return pixels_.width(); }
  std::size_t height() const noexcept { return pixels_.height(); }
  std::size_t pixel_count() const noexcept { return pixels_.size(); }
  double operator()(std::size_t x, std::size_t y) const { return pixels_(x, y); }

  const RealMap& pixels() const noexcept { return pixels_; }

  friend bool operator==(const GrayImage&, const GrayImage&) = default;

 private:
  RealMap pixels_;
};

GrayImage transpose(const GrayImage& img);

struct Rgb {
  std::uint8_t r = 0, g = 0, b = 0;
  friend bool operator==(const Rgb&, const Rgb&) = default;
};

using RgbImage = Grid<Rgb>;

}  // namespace atrq
