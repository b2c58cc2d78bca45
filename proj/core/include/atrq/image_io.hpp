#pragma once

#include <filesystem>

#include "atrq/grid.hpp"

namespace atrq {

/// Decodes PNG/BMP/JPEG (anything OpenCV's imgcodecs accepts). Colour input is
/// reduced with BT.601 luma, 0.299 R + 0.587 G + 0.114 B; 16-bit input is
/// rescaled to [0, 255].
GrayImage load_image_grayscale(const std::filesystem::path& path);

/// Luma of one 8-bit RGB triple.
double bt601_luma(double r, double g, double b) noexcept;

/// Writes an 8-bit PNG; samples are rounded to the nearest integer.
void save_png(const GrayImage& img, const std::filesystem::path& path);
void save_png(const RgbImage& img, const std::filesystem::path& path);

}  // namespace atrq
