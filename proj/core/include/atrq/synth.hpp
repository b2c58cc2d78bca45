#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "atrq/manifest.hpp"
#include "atrq/pipeline.hpp"

namespace atrq {

/// Separable Gaussian, radius ceil(3 sigma), unit-sum kernel, clamp-to-edge borders.
GrayImage gaussian_blur(const GrayImage& img, double sigma);

/// Adds N(0, sigma^2) noise from a generator seeded with `seed`, then clips to [0, 255].
GrayImage add_white_noise(const GrayImage& img, double sigma, std::uint64_t seed);

/// Deterministic natural-looking test scene: a multi-octave Gaussian noise
/// field (roughly 1/f statistics) with flat-filled, finely textured rectangles
/// laid over it. Values are rounded to integers in [0, 255].
GrayImage procedural_reference(std::uint64_t seed, std::size_t size = 128);

inline const std::vector<double> kDefaultBlurLadder{0.5, 1.0, 2.0, 4.0, 8.0};
inline const std::vector<double> kDefaultNoiseLadder{2.0, 5.0, 10.0, 20.0, 40.0};

struct LadderSpec {
  std::vector<double> blur_sigmas = kDefaultBlurLadder;
  std::vector<double> noise_sigmas = kDefaultNoiseLadder;
  bool include_reference = true;
  std::uint64_t seed = 0;
};

/// Severity proxy stored as DMOS for synthetic rows: references get 0 and
/// ladder level i of n maps to 100 * (i + 1) / (n + 1). It is monotone in the
/// degradation strength and carries no perceptual meaning.
double synthetic_dmos(std::size_t level, std::size_t levels) noexcept;

struct SyntheticItem {
  DatasetRecord record;
  std::string file_name;  // suggested file name, e.g. "ref03_blur_2.png"
};

/// Degrades each reference along both ladders; outputs are rounded to integers. Noise for reference r at level i
/// uses seed `spec.seed + 1000 * r + i`.
std::vector<SyntheticItem> synthesize(const std::vector<DatasetRecord>& references,
                                      const LadderSpec& spec);

/// Writes the images as PNG under `out_dir` along with `manifest.csv`; returns
/// the manifest rows written.
std::vector<ManifestRecord> write_synthetic_dataset(const std::vector<SyntheticItem>& items,
                                                    const std::filesystem::path& out_dir);

}  // namespace atrq
