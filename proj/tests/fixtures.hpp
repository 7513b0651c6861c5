#pragma once

// Deterministic synthetic scenes with enough corners, blobs and
// well-contrasted components that every native detector fires.

#include <algorithm>
#include <cmath>
#include <random>

#include "scenebias/image.hpp"

namespace fixtures {

using scenebias::GrayImage;

inline void fill_rect(GrayImage& img, int x0, int y0, int x1, int y1, int value) {
  for (int y = std::max(0, y0); y <= std::min(img.height - 1, y1); ++y)
    for (int x = std::max(0, x0); x <= std::min(img.width - 1, x1); ++x)
      img.at(x, y) = static_cast<std::uint8_t>(std::clamp(value, 0, 255));
}

inline void fill_disk(GrayImage& img, double cx, double cy, double r, int value) {
  for (int y = std::max(0, static_cast<int>(cy - r) - 1);
       y <= std::min(img.height - 1, static_cast<int>(cy + r) + 1); ++y)
    for (int x = std::max(0, static_cast<int>(cx - r) - 1);
         x <= std::min(img.width - 1, static_cast<int>(cx + r) + 1); ++x)
      if ((x - cx) * (x - cx) + (y - cy) * (y - cy) <= r * r)
        img.at(x, y) = static_cast<std::uint8_t>(std::clamp(value, 0, 255));
}

inline void add_gaussian_blob(GrayImage& img, double cx, double cy, double sigma, int amplitude) {
  const int reach = static_cast<int>(3.0 * sigma) + 1;
  for (int y = std::max(0, static_cast<int>(cy) - reach);
       y <= std::min(img.height - 1, static_cast<int>(cy) + reach); ++y)
    for (int x = std::max(0, static_cast<int>(cx) - reach);
         x <= std::min(img.width - 1, static_cast<int>(cx) + reach); ++x) {
      const double d2 = (x - cx) * (x - cx) + (y - cy) * (y - cy);
      const int v = img.at(x, y) +
                    static_cast<int>(std::lround(amplitude * std::exp(-0.5 * d2 / (sigma * sigma))));
      img.at(x, y) = static_cast<std::uint8_t>(std::clamp(v, 0, 255));
    }
}

/// Mid-gray background with one object per grid cell (rectangles, disks and
/// smooth blobs, alternating dark/bright), jittered deterministically.
inline GrayImage synthetic_scene(int width, int height, std::uint32_t seed) {
  GrayImage img(width, height, 128);
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> jitter(-3, 3);
  std::uniform_int_distribution<int> half_size(3, 6);
  std::uniform_int_distribution<int> contrast(60, 110);
  std::uniform_real_distribution<double> blob_sigma(2.0, 5.0);

  const int cell = 30;
  int index = 0;
  for (int cy = cell / 2; cy + cell / 2 <= height; cy += cell) {
    for (int cx = cell / 2; cx + cell / 2 <= width; cx += cell, ++index) {
      const int x = cx + jitter(rng);
      const int y = cy + jitter(rng);
      const int sign = (index % 2 == 0) ? 1 : -1;
      const int value = 128 + sign * contrast(rng);
      // Fractional centers keep responses free of exact symmetry ties.
      const double fx = x + 0.29, fy = y + 0.41;
      switch (index % 3) {
        case 0: {
          const int hw = half_size(rng), hh = half_size(rng);
          fill_rect(img, x - hw, y - hh, x + hw, y + hh, value);
          break;
        }
        case 1:
          fill_disk(img, fx, fy, half_size(rng) + 0.5, value);
          break;
        case 2:
          add_gaussian_blob(img, fx, fy, blob_sigma(rng), sign * contrast(rng));
          break;
      }
    }
  }
  return img;
}

}  // namespace fixtures
