#include "scenebias/image.hpp"

#include <cmath>

namespace scenebias {

GrayImage::GrayImage(int w, int h, std::uint8_t fill)
    : width(w), height(h), data(static_cast<std::size_t>(w) * h, fill) {}

IntegralImage::IntegralImage(const GrayImage& img)
    : width_(img.width), height_(img.height),
      table_(static_cast<std::size_t>(img.width + 1) * (img.height + 1), 0) {
  const int stride = width_ + 1;
  for (int y = 0; y < height_; ++y) {
    std::uint64_t row = 0;
    const std::uint8_t* src = img.data.data() + static_cast<std::size_t>(y) * width_;
    std::uint64_t* above = table_.data() + static_cast<std::size_t>(y) * stride;
    std::uint64_t* out = table_.data() + static_cast<std::size_t>(y + 1) * stride;
    for (int x = 0; x < width_; ++x) {
      row += src[x];
      out[x + 1] = above[x + 1] + row;
    }
  }
}

IntegralImage integral(const GrayImage& img) { return IntegralImage(img); }

std::uint8_t luminance(std::uint8_t r, std::uint8_t g, std::uint8_t b) {
  const double y = 0.299 * r + 0.587 * g + 0.114 * b;
  return static_cast<std::uint8_t>(std::floor(y + 0.5));
}

}  // namespace scenebias
