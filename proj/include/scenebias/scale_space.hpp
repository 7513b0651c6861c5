#pragma once

#include <vector>

#include "scenebias/image.hpp"

namespace scenebias {

/// Single-channel float raster used by the scale-space detectors.
struct FloatImage {
  int width = 0;
  int height = 0;
  std::vector<float> data;

  FloatImage() = default;
  FloatImage(int w, int h, float fill = 0.0f)
      : width(w), height(h), data(static_cast<std::size_t>(w) * h, fill) {}

  float at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x]; }
  float& at(int x, int y) { return data[static_cast<std::size_t>(y) * width + x]; }
};

FloatImage to_float(const GrayImage& img);

/// Gaussian smoothing, same kernel policy as the dataset blur (truncation at
/// ceil(3*sigma), renormalized, reflect-101) but without quantization.
FloatImage gaussian_smooth(const FloatImage& img, double sigma);

/// Levels i = 0..count-1 smoothed to sigma0 * step^i, built incrementally.
struct ScalePyramid {
  std::vector<double> sigmas;
  std::vector<FloatImage> levels;
};

ScalePyramid build_pyramid(const GrayImage& img, double sigma0, double step, int count,
                           double sigma_scale = 1.0);

/// Central-difference derivatives with reflect-101 edges.
FloatImage derivative_x(const FloatImage& img);
FloatImage derivative_y(const FloatImage& img);
FloatImage derivative_xx(const FloatImage& img);
FloatImage derivative_yy(const FloatImage& img);
FloatImage derivative_xy(const FloatImage& img);

}  // namespace scenebias
