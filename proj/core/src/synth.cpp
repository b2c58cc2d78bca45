#include "atrq/synth.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <random>

#include "atrq/error.hpp"
#include "atrq/image_io.hpp"

namespace atrq {
namespace {

std::vector<double> gaussian_kernel(double sigma) {
  const auto radius = static_cast<std::size_t>(std::ceil(3.0 * sigma));
  std::vector<double> k(2 * radius + 1);
  double sum = 0.0;
  for (std::size_t i = 0; i < k.size(); ++i) {
    const double d = static_cast<double>(i) - static_cast<double>(radius);
    k[i] = std::exp(-d * d / (2.0 * sigma * sigma));
    sum += k[i];
  }
  for (double& v : k) v /= sum;
  return k;
}

// One separable pass over an unconstrained real map.
RealMap convolve_rows(const RealMap& in, std::span<const double> k) {
  const auto r = static_cast<std::ptrdiff_t>(k.size() / 2);
  const auto w = static_cast<std::ptrdiff_t>(in.width());
  RealMap out(in.width(), in.height());
  for (std::size_t y = 0; y < in.height(); ++y) {
    auto src = in.row(y);
    auto dst = out.row(y);
    for (std::ptrdiff_t x = 0; x < w; ++x) {
      double acc = 0.0;
      for (std::ptrdiff_t t = -r; t <= r; ++t) {
        const auto xx = std::clamp<std::ptrdiff_t>(x + t, 0, w - 1);
        acc += k[static_cast<std::size_t>(t + r)] * src[static_cast<std::size_t>(xx)];
      }
      dst[static_cast<std::size_t>(x)] = acc;
    }
  }
  return out;
}

RealMap blur_map(const RealMap& in, double sigma) {
  const auto k = gaussian_kernel(sigma);
  return transpose(convolve_rows(transpose(convolve_rows(in, k)), k));
}

RealMap normalised_noise_field(std::mt19937_64& rng, std::size_t n, double sigma) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  RealMap z(n, n);
  for (double& v : z.values()) v = gauss(rng);
  RealMap b = sigma > 0.0 ? blur_map(z, sigma) : z;
  double mean = 0.0, ss = 0.0;
  for (double v : b.values()) mean += v;
  mean /= static_cast<double>(b.size());
  for (double v : b.values()) ss += (v - mean) * (v - mean);
  const double sd = std::sqrt(ss / static_cast<double>(b.size()));
  for (double& v : b.values()) v = (v - mean) / sd;
  return b;
}

// Sum of blurred-noise octaves at scales 1, 2, 4, ... with weights 2^(0.3 k);
// the small exponent keeps plenty of fine-scale energy.
RealMap fractal_field(std::mt19937_64& rng, std::size_t n) {
  constexpr int kOctaves = 6;
  constexpr double kHurst = 0.3;
  RealMap acc(n, n, 0.0);
  for (int k = 0; k < kOctaves; ++k) {
    const RealMap octave = normalised_noise_field(rng, n, std::ldexp(1.0, k));
    const double weight = std::pow(2.0, kHurst * k);
    auto a = acc.values();
    auto o = octave.values();
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += weight * o[i];
  }
  double mean = 0.0, ss = 0.0;
  for (double v : acc.values()) mean += v;
  mean /= static_cast<double>(acc.size());
  for (double v : acc.values()) ss += (v - mean) * (v - mean);
  const double sd = std::sqrt(ss / static_cast<double>(acc.size()));
  for (double& v : acc.values()) v /= sd;
  return acc;
}

}  // namespace

GrayImage gaussian_blur(const GrayImage& img, double sigma) {
  if (!(std::isfinite(sigma) && sigma > 0.0)) {
    fail(ErrorKind::InvalidInput, "gaussian_blur: sigma must be positive");
  }
  RealMap out = blur_map(img.pixels(), sigma);
  // A unit-sum kernel keeps values within the input range up to rounding.
  for (double& v : out.values()) v = std::clamp(v, GrayImage::kMinValue, GrayImage::kMaxValue);
  return GrayImage(std::move(out));
}

GrayImage add_white_noise(const GrayImage& img, double sigma, std::uint64_t seed) {
  if (!(std::isfinite(sigma) && sigma > 0.0)) {
    fail(ErrorKind::InvalidInput, "add_white_noise: sigma must be positive");
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, sigma);
  RealMap out = img.pixels();
  for (double& v : out.values()) {
    v = std::clamp(v + gauss(rng), GrayImage::kMinValue, GrayImage::kMaxValue);
  }
  return GrayImage(std::move(out));
}

GrayImage procedural_reference(std::uint64_t seed, std::size_t size) {
  if (size < 16) fail(ErrorKind::InvalidInput, "procedural_reference: size must be at least 16");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const auto n = static_cast<double>(size);

  RealMap img = fractal_field(rng, size);
  for (double& v : img.values()) v = 128.0 + 40.0 * v;

  constexpr int kPatches = 6;
  constexpr double kPatchTexture = 6.0;
  for (int p = 0; p < kPatches; ++p) {
    const double x0 = unit(rng) * n;
    const double y0 = unit(rng) * n;
    const double w = n / 12.0 + unit(rng) * (n / 2.5 - n / 12.0);
    const double h = n / 12.0 + unit(rng) * (n / 2.5 - n / 12.0);
    const double fill = 30.0 + unit(rng) * 190.0;
    const RealMap texture = fractal_field(rng, size);
    for (std::size_t y = 0; y < size; ++y) {
      for (std::size_t x = 0; x < size; ++x) {
        const auto fx = static_cast<double>(x);
        const auto fy = static_cast<double>(y);
        if (fx >= x0 && fx < x0 + w && fy >= y0 && fy < y0 + h) {
          img(x, y) = fill + kPatchTexture * texture(x, y);
        }
      }
    }
  }
  for (double& v : img.values()) v = std::clamp(std::round(v), 0.0, 255.0);
  return GrayImage(std::move(img));
}

double synthetic_dmos(std::size_t level, std::size_t levels) noexcept {
  return 100.0 * static_cast<double>(level + 1) / static_cast<double>(levels + 1);
}

namespace {

// Synthetic rows are stored as 8-bit PNGs; quantising here keeps the
// in-memory dataset identical to what a reload from disk produces.
GrayImage quantize(const GrayImage& img) {
  RealMap px = img.pixels();
  for (double& v : px.values()) v = std::round(v);
  return GrayImage(std::move(px));
}

}  // namespace

std::vector<SyntheticItem> synthesize(const std::vector<DatasetRecord>& references,
                                      const LadderSpec& spec) {
  std::vector<SyntheticItem> items;
  for (std::size_t r = 0; r < references.size(); ++r) {
    const DatasetRecord& ref = references[r];
    const std::string group = ref.ref_id.empty() ? fmt::format("ref{:02}", r) : ref.ref_id;
    if (spec.include_reference) {
      items.push_back({{ref.source, ref.image, 0.0, ArtifactLabel::Reference, group},
                       fmt::format("{}_ref.png", group)});
    }
    for (std::size_t i = 0; i < spec.blur_sigmas.size(); ++i) {
      const std::string name = fmt::format("{}_blur_{}.png", group, i);
      items.push_back({{name, quantize(gaussian_blur(ref.image, spec.blur_sigmas[i])),
                        synthetic_dmos(i, spec.blur_sigmas.size()), ArtifactLabel::Blur, group},
                       name});
    }
    for (std::size_t i = 0; i < spec.noise_sigmas.size(); ++i) {
      const std::string name = fmt::format("{}_noise_{}.png", group, i);
      const std::uint64_t seed = spec.seed + 1000 * r + i;
      items.push_back({{name, quantize(add_white_noise(ref.image, spec.noise_sigmas[i], seed)),
                        synthetic_dmos(i, spec.noise_sigmas.size()), ArtifactLabel::Noise, group},
                       name});
    }
  }
  return items;
}

std::vector<ManifestRecord> write_synthetic_dataset(const std::vector<SyntheticItem>& items,
                                                    const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) fail(ErrorKind::Io, fmt::format("cannot create '{}': {}", out_dir.string(), ec.message()));
  std::vector<ManifestRecord> rows;
  for (const auto& item : items) {
    const auto path = (out_dir / item.file_name).lexically_normal();
    save_png(item.record.image, path);
    rows.push_back({path, item.record.dmos, item.record.label, item.record.ref_id});
  }
  write_manifest(out_dir / "manifest.csv", rows);
  return rows;
}

}  // namespace atrq
