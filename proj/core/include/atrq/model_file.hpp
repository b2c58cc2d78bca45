#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "atrq/regression.hpp"

namespace atrq {

// Plain-text key = value document; '#' starts a comment line.
//
//   artifact = blur
//   c = 4.7232
//   b1 = 0.0027
//   b2 = -0.0114
//   feature = count        (optional, defaults to fraction)
//   samples = 174          (optional)
//   fit_date = 2026-01-31  (optional)

std::string format_model(const RegressionModel& model);
RegressionModel parse_model(std::string_view text);

void save_model(const RegressionModel& model, const std::filesystem::path& path);
RegressionModel load_model(const std::filesystem::path& path);

}  // namespace atrq
