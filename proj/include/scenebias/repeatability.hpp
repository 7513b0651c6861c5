#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "scenebias/homography.hpp"
#include "scenebias/regions.hpp"
#include "scenebias/transforms.hpp"

namespace scenebias {

struct FrameBounds {
  int width = 0;
  int height = 0;

  bool contains(const Point2& p) const {
    return p.x >= 0.0 && p.y >= 0.0 && p.x < width && p.y < height;
  }
};

struct RepeatabilityResult {
  int n_ref = 0;
  int n_rep = 0;
  double ratio = 0.0;
};

/// N_rep / N_ref over the common part: reference regions whose mapped centers
/// land inside the test frame, matched one-to-one under the overlap
/// criterion. Throws UndefinedRepeatabilityError when N_ref = 0; callers
/// exclude that (scene, detector) pair from rankings and log it.
RepeatabilityResult repeatability(const std::vector<InterestRegion>& ref,
                                  const std::vector<InterestRegion>& test, const Homography& h,
                                  const FrameBounds& frame, double eps_overlap,
                                  double normalize_radius = 0.0);

/// One measurement: detector d, scene p, transformation step k.
struct RepeatabilityRecord {
  std::string detector;
  TransformKind kind = TransformKind::Blur;
  int scene = 0;
  int step = 0;
  double param = 0.0;
  int n_ref = 0;
  int n_rep = 0;
  double ratio = 0.0;
};

/// Canonical order (detector, kind, scene, step) for byte-stable CSVs.
void sort_records(std::vector<RepeatabilityRecord>& records);

std::string records_to_csv(const std::vector<RepeatabilityRecord>& records);
std::vector<RepeatabilityRecord> records_from_csv(const std::string& text);

void save_records(const std::vector<RepeatabilityRecord>& records,
                  const std::filesystem::path& path);
std::vector<RepeatabilityRecord> load_records(const std::filesystem::path& path);

}  // namespace scenebias
