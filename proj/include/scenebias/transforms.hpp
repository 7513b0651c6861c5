#pragma once

#include <string>
#include <vector>

#include "scenebias/image.hpp"

namespace scenebias {

enum class TransformKind { Blur, Light };

std::string to_string(TransformKind kind);
TransformKind transform_kind_from_string(const std::string& name);

/// One point of a transformation schedule. k is 1-based; k = 1 is always the
/// untransformed reference (sigma 0 for blur, factor 1 for light).
struct TransformStep {
  TransformKind kind;
  int k;
  double param;
};

/// Default blur sigmas: {0.0, 0.5, ..., 4.5}, 10 values.
std::vector<double> blur_schedule();

/// Default light factors: {1.00, 0.90, 0.85, ..., 0.30}, 14 values
/// (reference plus 13 reductions at 0.05 spacing).
std::vector<double> light_schedule();

/// Expands a parameter schedule into 1-based steps; validates that the
/// schedule starts at the reference value and is strictly monotone.
std::vector<TransformStep> steps_for(TransformKind kind, const std::vector<double>& schedule);

/// Separable Gaussian convolution, kernel truncated at radius ceil(3*sigma)
/// and renormalized, reflect-101 borders, one final round-half-up to 8 bits.
/// sigma = 0 returns the input unchanged.
GrayImage gaussian_blur(const GrayImage& img, double sigma);

/// Pointwise v -> clamp(round(s*v)). s must lie in (0, 1].
GrayImage reduce_light(const GrayImage& img, double factor);

GrayImage apply_step(const GrayImage& img, const TransformStep& step);

}  // namespace scenebias
