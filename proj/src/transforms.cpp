#include "scenebias/transforms.hpp"

#include <algorithm>
#include <cmath>

#include "scenebias/errors.hpp"

namespace scenebias {

std::string to_string(TransformKind kind) {
  return kind == TransformKind::Blur ? "blur" : "light";
}

TransformKind transform_kind_from_string(const std::string& name) {
  if (name == "blur") return TransformKind::Blur;
  if (name == "light") return TransformKind::Light;
  throw ArgumentError("unknown transformation kind '" + name + "'");
}

std::vector<double> blur_schedule() {
  std::vector<double> sigmas;
  for (int i = 0; i < 10; ++i) sigmas.push_back(0.5 * i);
  return sigmas;
}

std::vector<double> light_schedule() {
  std::vector<double> factors{1.0};
  for (int i = 0; i < 13; ++i) factors.push_back((90 - 5 * i) / 100.0);
  return factors;
}

std::vector<TransformStep> steps_for(TransformKind kind, const std::vector<double>& schedule) {
  if (schedule.empty()) throw ArgumentError("empty transformation schedule");
  const double reference = kind == TransformKind::Blur ? 0.0 : 1.0;
  if (schedule.front() != reference)
    throw ArgumentError("schedule must start at the reference value (" +
                        std::to_string(reference) + ")");
  for (std::size_t i = 1; i < schedule.size(); ++i) {
    const bool ok = kind == TransformKind::Blur ? schedule[i] > schedule[i - 1]
                                                : schedule[i] < schedule[i - 1];
    if (!ok) throw ArgumentError("schedule must be strictly monotone");
    if (kind == TransformKind::Light && (schedule[i] <= 0.0 || schedule[i] > 1.0))
      throw ArgumentError("light factors must lie in (0, 1]");
  }
  std::vector<TransformStep> steps;
  for (std::size_t i = 0; i < schedule.size(); ++i)
    steps.push_back({kind, static_cast<int>(i) + 1, schedule[i]});
  return steps;
}

namespace {

// Reflect-101 index fold: ... 2 1 | 0 1 2 ... n-1 | n-2 n-3 ...
int reflect101(int i, int n) {
  if (n == 1) return 0;
  const int period = 2 * (n - 1);
  i = ((i % period) + period) % period;
  return i < n ? i : period - i;
}

std::vector<double> gaussian_kernel(double sigma) {
  const int radius = static_cast<int>(std::ceil(3.0 * sigma));
  std::vector<double> k(2 * radius + 1);
  double sum = 0.0;
  for (int i = -radius; i <= radius; ++i) {
    k[i + radius] = std::exp(-0.5 * (i * i) / (sigma * sigma));
    sum += k[i + radius];
  }
  for (auto& v : k) v /= sum;
  return k;
}

}  // namespace

GrayImage gaussian_blur(const GrayImage& img, double sigma) {
  if (sigma < 0.0) throw ArgumentError("gaussian_blur: sigma must be >= 0");
  if (sigma == 0.0) return img;

  const std::vector<double> kernel = gaussian_kernel(sigma);
  const int radius = static_cast<int>(kernel.size() / 2);
  const int w = img.width;
  const int h = img.height;

  // Horizontal pass, kept in floating point until the final rounding.
  std::vector<double> tmp(img.pixel_count());
  for (int y = 0; y < h; ++y) {
    const std::uint8_t* src = img.data.data() + static_cast<std::size_t>(y) * w;
    double* dst = tmp.data() + static_cast<std::size_t>(y) * w;
    for (int x = 0; x < w; ++x) {
      double acc = 0.0;
      for (int i = -radius; i <= radius; ++i)
        acc += kernel[i + radius] * src[reflect101(x + i, w)];
      dst[x] = acc;
    }
  }

  // Vertical pass with a single round-half-up and clamp.
  GrayImage out(w, h);
  std::vector<const double*> rows(2 * radius + 1);
  for (int y = 0; y < h; ++y) {
    for (int i = -radius; i <= radius; ++i)
      rows[i + radius] = tmp.data() + static_cast<std::size_t>(reflect101(y + i, h)) * w;
    std::uint8_t* dst = out.data.data() + static_cast<std::size_t>(y) * w;
    for (int x = 0; x < w; ++x) {
      double acc = 0.0;
      for (int i = 0; i <= 2 * radius; ++i) acc += kernel[i] * rows[i][x];
      const double rounded = std::floor(acc + 0.5);
      dst[x] = static_cast<std::uint8_t>(std::clamp(rounded, 0.0, 255.0));
    }
  }
  return out;
}

GrayImage reduce_light(const GrayImage& img, double factor) {
  if (!(factor > 0.0 && factor <= 1.0))
    throw ArgumentError("reduce_light: factor must lie in (0, 1]");
  GrayImage out(img.width, img.height);
  for (std::size_t i = 0; i < img.data.size(); ++i) {
    const double v = std::floor(factor * img.data[i] + 0.5);
    out.data[i] = static_cast<std::uint8_t>(std::clamp(v, 0.0, 255.0));
  }
  return out;
}

GrayImage apply_step(const GrayImage& img, const TransformStep& step) {
  return step.kind == TransformKind::Blur ? gaussian_blur(img, step.param)
                                          : reduce_light(img, step.param);
}

}  // namespace scenebias
