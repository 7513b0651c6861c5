#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace scenebias {

/// A detected feature: center plus elliptical extent. The boundary satisfies
/// a(u-x)^2 + 2b(u-x)(v-y) + c(v-y)^2 = 1; circles use a = c = 1/r^2, b = 0.
struct InterestRegion {
  double x = 0.0;
  double y = 0.0;
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double strength = 0.0;

  static InterestRegion circle(double x, double y, double r, double strength = 0.0);

  bool positive_definite() const { return a > 0.0 && c > 0.0 && a * c - b * b > 0.0; }

  /// Largest semi-axis (radius of the bounding circle around the center).
  double max_radius() const;

  friend bool operator==(const InterestRegion&, const InterestRegion&) = default;
};

/// Canonical order: descending strength, ties by (y, x) ascending.
void sort_regions(std::vector<InterestRegion>& regions);

struct DetectorId {
  enum class Kind { HarrisLaplace, HessianLaplace, Mser, FastHessian, External };

  Kind kind = Kind::HarrisLaplace;
  std::string tag;  // set for external detectors only

  std::string name() const;
  bool is_native() const { return kind != Kind::External; }

  /// Accepts HARLAP, HESLAP, MSER, FASTHESS, or EXT:<tag>.
  static DetectorId parse(const std::string& name);

  friend bool operator==(const DetectorId&, const DetectorId&) = default;
  friend auto operator<=>(const DetectorId&, const DetectorId&) = default;
};

/// Region file format shared with third-party detector binaries:
/// line 1 = "1.0", line 2 = region count N, then N lines "x y a b c".
std::vector<InterestRegion> parse_region_text(const std::string& text,
                                              const std::string& origin);
std::string format_region_text(const std::vector<InterestRegion>& regions);

std::vector<InterestRegion> read_region_file(const std::filesystem::path& path);
void write_region_file(const std::vector<InterestRegion>& regions,
                       const std::filesystem::path& path);

}  // namespace scenebias
