#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "scenebias/transforms.hpp"

namespace scenebias {

/// Per-scene entry of the manifest: two ordered image lists (paths relative
/// to the database root), one per transformation kind.
struct SceneEntry {
  int id = 0;
  std::string source;  // reference file the scene was built from
  std::vector<std::string> blur_images;
  std::vector<std::string> light_images;

  const std::vector<std::string>& images(TransformKind kind) const {
    return kind == TransformKind::Blur ? blur_images : light_images;
  }
};

struct DatasetManifest {
  int version = 1;
  std::vector<double> blur_sigmas;
  std::vector<double> light_factors;
  std::vector<SceneEntry> scenes;
  std::string kernel_truncation = "radius=ceil(3*sigma)";
  std::string rounding = "half-up";
  std::string border = "reflect-101";
  std::string light_transfer = "linear-on-stored-values";

  std::filesystem::path root;  // directory holding manifest.json; not serialized

  const std::vector<double>& schedule(TransformKind kind) const {
    return kind == TransformKind::Blur ? blur_sigmas : light_factors;
  }
};

std::string manifest_to_json(const DatasetManifest& manifest);
DatasetManifest manifest_from_json(const std::string& text);

void save_manifest(const DatasetManifest& manifest, const std::filesystem::path& path);
DatasetManifest load_manifest(const std::filesystem::path& path);

/// Canonical on-disk names: scene directory "0007", image "3_1.00.pgm".
std::string scene_dir_name(int scene_id);
std::string step_file_name(int k, double param);

struct GenerateOptions {
  std::vector<double> blur_sigmas;   // empty = default schedule
  std::vector<double> light_factors; // empty = default schedule
  int jobs = 0;
  bool force = false;
};

/// Synthesizes the transformation database: for every decodable reference
/// image under refs_dir (sorted by filename, scene ids 1..n), writes both
/// transformation datasets and the manifest. Existing files are kept as-is
/// unless options.force is set, so reruns are byte-stable and cheap.
DatasetManifest generate_database(const std::filesystem::path& refs_dir,
                                  const std::filesystem::path& out_dir,
                                  const GenerateOptions& options = {});

}  // namespace scenebias
