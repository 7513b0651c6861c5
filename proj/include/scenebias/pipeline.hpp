#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "scenebias/dataset.hpp"
#include "scenebias/detectors.hpp"
#include "scenebias/labels.hpp"
#include "scenebias/regions.hpp"
#include "scenebias/repeatability.hpp"

namespace scenebias {

std::vector<DetectorId> default_roster();

struct RunConfig {
  std::filesystem::path refs_dir;     // reference images consumed by gen
  std::filesystem::path db_root;      // transformation database
  std::filesystem::path out_dir;      // stage outputs
  std::filesystem::path labels_path;  // scene labels CSV

  std::vector<DetectorId> detectors = default_roster();
  DetectorSettings detector_settings;

  double eps_overlap = 0.4;
  double normalize_radius = 0.0;  // 0 = no pair-size normalization
  int j = 20;
  std::vector<double> blur_sigmas;    // empty = default schedule
  std::vector<double> light_factors;  // empty = default schedule

  // Report amounts: blur sigmas, light reductions in percent.
  std::vector<double> report_blur = {0.5, 2.0, 3.0};
  std::vector<double> report_light = {10.0, 40.0, 60.0};

  int jobs = 0;
  bool force = false;
};

struct StageSummary {
  std::vector<std::string> gaps;        // missing or failed work items
  std::vector<std::string> exclusions;  // datasets with undefined repeatability
  int processed = 0;
  int skipped = 0;  // cache hits
};

/// Stage outputs under out_dir. Region files mirror the database layout.
std::filesystem::path region_file_path(const std::filesystem::path& out_dir,
                                       const DetectorId& detector, int scene, TransformKind kind,
                                       int step, double param);

DatasetManifest cmd_gen(const RunConfig& config);
StageSummary cmd_detect(const RunConfig& config);
StageSummary cmd_eval(const RunConfig& config);
StageSummary cmd_report(const RunConfig& config);

}  // namespace scenebias
