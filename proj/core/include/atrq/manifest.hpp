#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "atrq/pipeline.hpp"

namespace atrq {

/// One dataset row. Manifest files are comma-separated UTF-8 with the header
/// `image_path,dmos,artifact_label,ref_id`; lines starting with '#' are skipped.
struct ManifestRecord {
  std::filesystem::path image_path;  // resolved against the manifest directory
  double dmos = 0.0;
  ArtifactLabel artifact_label = ArtifactLabel::Unknown;
  std::string ref_id;

  friend bool operator==(const ManifestRecord&, const ManifestRecord&) = default;
};

/// Accepts blur/gblur, noise/wn/whitenoise/white_noise, reference/ref/original,
/// unknown. Case-insensitive.
ArtifactLabel parse_label(std::string_view text);

std::vector<ManifestRecord> parse_manifest(std::string_view text,
                                           const std::filesystem::path& base_dir);
std::vector<ManifestRecord> load_manifest(const std::filesystem::path& path);

/// Paths are written relative to the manifest's directory when they live below it.
void write_manifest(const std::filesystem::path& path, const std::vector<ManifestRecord>& records);

/// Decodes every image of a manifest into dataset records.
std::vector<DatasetRecord> load_dataset(const std::vector<ManifestRecord>& manifest);

}  // namespace atrq
