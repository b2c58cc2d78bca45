#include "atrq/manifest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fmt/format.h>
#include <fstream>
#include <sstream>

#include "atrq/error.hpp"
#include "atrq/image_io.hpp"

namespace atrq {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    cells.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

constexpr std::string_view kColumns[] = {"image_path", "dmos", "artifact_label", "ref_id"};

}  // namespace

ArtifactLabel parse_label(std::string_view text) {
  std::string s(trim(text));
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (s == "blur" || s == "gblur") return ArtifactLabel::Blur;
  if (s == "noise" || s == "wn" || s == "whitenoise" || s == "white_noise") {
    return ArtifactLabel::Noise;
  }
  if (s == "reference" || s == "ref" || s == "original") return ArtifactLabel::Reference;
  if (s == "unknown" || s.empty()) return ArtifactLabel::Unknown;
  fail(ErrorKind::InvalidInput, fmt::format("unrecognised artifact label '{}'", text));
}

std::vector<ManifestRecord> parse_manifest(std::string_view text,
                                           const std::filesystem::path& base_dir) {
  std::vector<ManifestRecord> records;
  std::vector<std::size_t> column(std::size(kColumns), 0);
  bool have_header = false;
  std::size_t width = 0;
  std::size_t line_no = 0;

  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.remove_prefix(3);
    if (line.empty() || line.front() == '#') continue;

    const auto cells = split_csv(line);
    if (!have_header) {
      for (std::size_t c = 0; c < std::size(kColumns); ++c) {
        const auto it = std::find(cells.begin(), cells.end(), kColumns[c]);
        if (it == cells.end()) {
          fail(ErrorKind::InvalidInput,
               fmt::format("manifest: header is missing column '{}'", kColumns[c]));
        }
        column[c] = static_cast<std::size_t>(it - cells.begin());
      }
      width = cells.size();
      have_header = true;
      continue;
    }
    if (cells.size() != width) {
      fail(ErrorKind::InvalidInput,
           fmt::format("manifest row {}: expected {} cells, found {}", line_no, width, cells.size()));
    }

    ManifestRecord r;
    const std::string_view path_cell = cells[column[0]];
    if (path_cell.empty()) {
      fail(ErrorKind::InvalidInput, fmt::format("manifest row {}: empty image_path", line_no));
    }
    std::filesystem::path p{std::string(path_cell)};
    r.image_path = p.is_absolute() ? p : (base_dir / p).lexically_normal();

    const std::string_view dmos_cell = cells[column[1]];
    const auto* end = dmos_cell.data() + dmos_cell.size();
    auto [ptr, ec] = std::from_chars(dmos_cell.data(), end, r.dmos);
    if (dmos_cell.empty() || ec != std::errc() || ptr != end || !std::isfinite(r.dmos)) {
      fail(ErrorKind::InvalidInput,
           fmt::format("manifest row {}: dmos '{}' is not a number", line_no, dmos_cell));
    }
    try {
      r.artifact_label = parse_label(cells[column[2]]);
    } catch (const Error& e) {
      fail(ErrorKind::InvalidInput, fmt::format("manifest row {}: {}", line_no, e.what()));
    }
    r.ref_id = std::string(cells[column[3]]);
    if (r.ref_id.empty()) {
      fail(ErrorKind::InvalidInput, fmt::format("manifest row {}: empty ref_id", line_no));
    }
    records.push_back(std::move(r));
  }
  if (!have_header) fail(ErrorKind::InvalidInput, "manifest is empty");
  return records;
}

std::vector<ManifestRecord> load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Io, fmt::format("cannot read manifest '{}'", path.string()));
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_manifest(ss.str(), path.parent_path());
}

void write_manifest(const std::filesystem::path& path, const std::vector<ManifestRecord>& records) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::Io, fmt::format("cannot write manifest '{}'", path.string()));
  const auto base = path.parent_path();
  out << "image_path,dmos,artifact_label,ref_id\n";
  for (const auto& r : records) {
    auto rel = r.image_path.lexically_relative(base.empty() ? "." : base);
    const bool inside = !rel.empty() && *rel.begin() != "..";
    const std::string shown = (inside ? rel : r.image_path).generic_string();
    out << fmt::format("{},{},{},{}\n", shown, r.dmos, to_string(r.artifact_label), r.ref_id);
  }
  if (!out) fail(ErrorKind::Io, fmt::format("failed writing manifest '{}'", path.string()));
}

std::vector<DatasetRecord> load_dataset(const std::vector<ManifestRecord>& manifest) {
  std::vector<DatasetRecord> out;
  out.reserve(manifest.size());
  for (const auto& m : manifest) {
    out.push_back({m.image_path.string(), load_image_grayscale(m.image_path), m.dmos,
                   m.artifact_label, m.ref_id});
  }
  return out;
}

}  // namespace atrq
