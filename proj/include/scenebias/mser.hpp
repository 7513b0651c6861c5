#pragma once

#include <optional>
#include <vector>

#include "scenebias/image.hpp"
#include "scenebias/regions.hpp"

namespace scenebias {

struct MserSettings {
  int delta = 5;
  int min_area = 30;            // pixels
  double max_area_ratio = 0.01; // fraction of the image
  double max_variation = 0.25;
};

/// A maximally stable extremal region with its member pixels (sorted linear
/// indices, y * width + x).
struct MserRegion {
  bool dark = true;   // polarity: dark-on-bright vs bright-on-dark
  int level = 0;      // completion level in sweep order (inverted image for bright)
  int area = 0;
  double variation = 0.0;
  std::vector<int> pixels;
};

/// Extremal-region stability analysis for one polarity, 4-connectivity.
///
/// Sweep semantics: for threshold t the level sets are {p : I(p) <= t} (the
/// image is inverted first for the bright polarity). Every distinct connected
/// component is a node of the component tree; a node completed at level l has
/// variation (|A| - |N|) / |N| with A the component of the level-(l + delta)
/// set containing it. A node is maximally stable iff it passes the area and
/// variation bounds, its variation does not exceed its parent's, and it beats
/// at least one child strictly (ties prefer the smaller region).
std::vector<MserRegion> mser_pixel_regions(const GrayImage& img, const MserSettings& settings,
                                           bool dark);

/// Moment-based ellipse fit: the boundary is placed at two Mahalanobis units
/// of the pixel scatter. Returns nothing when the scatter is degenerate.
std::optional<InterestRegion> ellipse_from_pixels(const std::vector<int>& pixels, int width,
                                                  double strength);

/// Both polarities, fitted ellipses, canonical order.
std::vector<InterestRegion> mser(const GrayImage& img, const MserSettings& settings = {});

}  // namespace scenebias
