#include "atrq/image_io.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>
#include <vector>

#include "atrq/error.hpp"

namespace atrq {

double bt601_luma(double r, double g, double b) noexcept {
  return 0.299 * r + 0.587 * g + 0.114 * b;
}

GrayImage load_image_grayscale(const std::filesystem::path& path) {
  if (!std::filesystem::is_regular_file(path)) {
    fail(ErrorKind::Io, fmt::format("image '{}' does not exist", path.string()));
  }
  cv::Mat raw = cv::imread(path.string(), cv::IMREAD_UNCHANGED);
  if (raw.empty()) fail(ErrorKind::Io, fmt::format("cannot decode image '{}'", path.string()));

  double scale = 1.0;
  switch (raw.depth()) {
    case CV_8U: break;
    case CV_16U: scale = 255.0 / 65535.0; break;
    default:
      fail(ErrorKind::Io, fmt::format("image '{}' has an unsupported bit depth", path.string()));
  }
  cv::Mat px;
  raw.convertTo(px, CV_64F, scale);

  const auto w = static_cast<std::size_t>(px.cols);
  const auto h = static_cast<std::size_t>(px.rows);
  if (w < GrayImage::kMinSide || h < GrayImage::kMinSide) {
    fail(ErrorKind::InvalidInput,
         fmt::format("image '{}' is {}x{}, smaller than 3x3", path.string(), w, h));
  }
  std::vector<double> data(w * h);
  const int channels = px.channels();
  for (std::size_t y = 0; y < h; ++y) {
    const double* row = px.ptr<double>(static_cast<int>(y));
    for (std::size_t x = 0; x < w; ++x) {
      const double* p = row + x * static_cast<std::size_t>(channels);
      double v = 0.0;
      if (channels == 1 || channels == 2) {
        v = p[0];  // gray, optionally with alpha
      } else {
        v = bt601_luma(p[2], p[1], p[0]);  // OpenCV stores BGR(A)
      }
      data[y * w + x] = std::clamp(v, 0.0, 255.0);
    }
  }
  return GrayImage(w, h, std::move(data));
}

namespace {

void write_or_throw(const std::filesystem::path& path, const cv::Mat& m) {
  bool ok = false;
  try {
    ok = cv::imwrite(path.string(), m);
  } catch (const cv::Exception& e) {
    fail(ErrorKind::Io, fmt::format("cannot write '{}': {}", path.string(), e.what()));
  }
  if (!ok) fail(ErrorKind::Io, fmt::format("cannot write '{}'", path.string()));
}

}  // namespace

void save_png(const GrayImage& img, const std::filesystem::path& path) {
  cv::Mat m(static_cast<int>(img.height()), static_cast<int>(img.width()), CV_8UC1);
  for (std::size_t y = 0; y < img.height(); ++y) {
    auto* row = m.ptr<std::uint8_t>(static_cast<int>(y));
    for (std::size_t x = 0; x < img.width(); ++x) {
      row[x] = static_cast<std::uint8_t>(std::lround(img(x, y)));
    }
  }
  write_or_throw(path, m);
}

void save_png(const RgbImage& img, const std::filesystem::path& path) {
  cv::Mat m(static_cast<int>(img.height()), static_cast<int>(img.width()), CV_8UC3);
  for (std::size_t y = 0; y < img.height(); ++y) {
    auto* row = m.ptr<std::uint8_t>(static_cast<int>(y));
    for (std::size_t x = 0; x < img.width(); ++x) {
      const Rgb& c = img(x, y);
      row[3 * x + 0] = c.b;
      row[3 * x + 1] = c.g;
      row[3 * x + 2] = c.r;
    }
  }
  write_or_throw(path, m);
}

}  // namespace atrq
