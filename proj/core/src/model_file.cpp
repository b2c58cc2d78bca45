#include "atrq/model_file.hpp"

#include <charconv>
#include <cmath>
#include <fmt/format.h>
#include <fstream>
#include <map>
#include <sstream>

#include "atrq/error.hpp"

namespace atrq {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_real(std::string_view key, std::string_view text) {
  double v = 0.0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v)) {
    fail(ErrorKind::InvalidInput, fmt::format("model: key '{}' has non-numeric value '{}'", key, text));
  }
  return v;
}

}  // namespace

std::string format_model(const RegressionModel& model) {
  std::string out = "# atrq log-log quadratic DMOS model\n";
  out += fmt::format("artifact = {}\n", to_string(model.artifact));
  out += fmt::format("c = {}\n", model.c);
  out += fmt::format("b1 = {}\n", model.b1);
  out += fmt::format("b2 = {}\n", model.b2);
  out += fmt::format("feature = {}\n", to_string(model.feature));
  if (model.sample_size > 0) out += fmt::format("samples = {}\n", model.sample_size);
  if (!model.fit_date.empty()) out += fmt::format("fit_date = {}\n", model.fit_date);
  return out;
}

RegressionModel parse_model(std::string_view text) {
  std::map<std::string, std::string, std::less<>> kv;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      fail(ErrorKind::InvalidInput, fmt::format("model: line {} is not 'key = value'", line_no));
    }
    kv[std::string(trim(line.substr(0, eq)))] = std::string(trim(line.substr(eq + 1)));
  }
  for (const char* key : {"artifact", "c", "b1", "b2"}) {
    if (!kv.contains(key)) fail(ErrorKind::InvalidInput, fmt::format("model: missing key '{}'", key));
  }
  RegressionModel m;
  m.artifact = parse_artifact(kv["artifact"]);
  m.c = parse_real("c", kv["c"]);
  m.b1 = parse_real("b1", kv["b1"]);
  m.b2 = parse_real("b2", kv["b2"]);
  if (auto it = kv.find("feature"); it != kv.end()) m.feature = parse_feature(it->second);
  if (auto it = kv.find("samples"); it != kv.end()) {
    m.sample_size = static_cast<std::size_t>(parse_real("samples", it->second));
  }
  if (auto it = kv.find("fit_date"); it != kv.end()) m.fit_date = it->second;
  return m;
}

void save_model(const RegressionModel& model, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::Io, fmt::format("cannot write model file '{}'", path.string()));
  out << format_model(model);
  if (!out) fail(ErrorKind::Io, fmt::format("failed writing model file '{}'", path.string()));
}

RegressionModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Io, fmt::format("cannot read model file '{}'", path.string()));
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_model(ss.str());
}

}  // namespace atrq
