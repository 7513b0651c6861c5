#pragma once

#include <cstdint>
#include <vector>

namespace scenebias {

/// 8-bit luminance raster, row-major. The unit of all processing.
struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> data;

  GrayImage() = default;
  GrayImage(int w, int h, std::uint8_t fill = 0);

  std::uint8_t at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x]; }
  std::uint8_t& at(int x, int y) { return data[static_cast<std::size_t>(y) * width + x]; }

  bool in_bounds(int x, int y) const { return x >= 0 && y >= 0 && x < width && y < height; }
  std::size_t pixel_count() const { return static_cast<std::size_t>(width) * height; }

  friend bool operator==(const GrayImage&, const GrayImage&) = default;
};

/// Cumulative-sum table of size (width+1) x (height+1); entry (x, y) is the
/// sum of all samples with coordinates strictly below (x, y). Box sums over
/// half-open rectangles cost four lookups.
class IntegralImage {
public:
  IntegralImage() = default;
  explicit IntegralImage(const GrayImage& img);

  int width() const { return width_; }
  int height() const { return height_; }

  std::uint64_t at(int x, int y) const {
    return table_[static_cast<std::size_t>(y) * (width_ + 1) + x];
  }

  /// Sum of samples over [x0, x1) x [y0, y1). Bounds must satisfy
  /// 0 <= x0 <= x1 <= width and likewise for y.
  std::uint64_t box_sum(int x0, int y0, int x1, int y1) const {
    return at(x1, y1) - at(x0, y1) - at(x1, y0) + at(x0, y0);
  }

private:
  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint64_t> table_;
};

IntegralImage integral(const GrayImage& img);

/// ITU-R BT.601 luminance, rounded half-up.
std::uint8_t luminance(std::uint8_t r, std::uint8_t g, std::uint8_t b);

}  // namespace scenebias
