#include "scenebias/scale_space.hpp"

#include <cmath>

#include "scenebias/errors.hpp"

namespace scenebias {

namespace {

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

FloatImage to_float(const GrayImage& img) {
  FloatImage out(img.width, img.height);
  for (std::size_t i = 0; i < img.data.size(); ++i) out.data[i] = img.data[i];
  return out;
}

FloatImage gaussian_smooth(const FloatImage& img, double sigma) {
  if (sigma < 0.0) throw ArgumentError("gaussian_smooth: sigma must be >= 0");
  if (sigma == 0.0) return img;

  const std::vector<double> kernel = gaussian_kernel(sigma);
  const int radius = static_cast<int>(kernel.size() / 2);
  const int w = img.width;
  const int h = img.height;

  FloatImage tmp(w, h);
  for (int y = 0; y < h; ++y) {
    const float* src = img.data.data() + static_cast<std::size_t>(y) * w;
    float* dst = tmp.data.data() + static_cast<std::size_t>(y) * w;
    for (int x = 0; x < w; ++x) {
      double acc = 0.0;
      for (int i = -radius; i <= radius; ++i)
        acc += kernel[i + radius] * src[reflect101(x + i, w)];
      dst[x] = static_cast<float>(acc);
    }
  }

  FloatImage out(w, h);
  std::vector<const float*> rows(kernel.size());
  for (int y = 0; y < h; ++y) {
    for (int i = -radius; i <= radius; ++i)
      rows[i + radius] = tmp.data.data() + static_cast<std::size_t>(reflect101(y + i, h)) * w;
    float* dst = out.data.data() + static_cast<std::size_t>(y) * w;
    for (int x = 0; x < w; ++x) {
      double acc = 0.0;
      for (std::size_t i = 0; i < kernel.size(); ++i) acc += kernel[i] * rows[i][x];
      dst[x] = static_cast<float>(acc);
    }
  }
  return out;
}

ScalePyramid build_pyramid(const GrayImage& img, double sigma0, double step, int count,
                           double sigma_scale) {
  if (count < 1 || sigma0 <= 0.0 || step <= 1.0)
    throw ArgumentError("build_pyramid: need count >= 1, sigma0 > 0, step > 1");

  ScalePyramid pyr;
  pyr.sigmas.reserve(count);
  pyr.levels.reserve(count);

  const FloatImage base = to_float(img);
  for (int i = 0; i < count; ++i) {
    const double sigma = sigma0 * std::pow(step, i) * sigma_scale;
    pyr.sigmas.push_back(sigma / sigma_scale);  // nominal pyramid scale
    if (i == 0) {
      pyr.levels.push_back(gaussian_smooth(base, sigma));
    } else {
      const double prev = sigma0 * std::pow(step, i - 1) * sigma_scale;
      const double delta = std::sqrt(sigma * sigma - prev * prev);
      pyr.levels.push_back(gaussian_smooth(pyr.levels.back(), delta));
    }
  }
  return pyr;
}

namespace {

template <typename F>
FloatImage map_pixels(const FloatImage& img, F&& f) {
  FloatImage out(img.width, img.height);
  for (int y = 0; y < img.height; ++y)
    for (int x = 0; x < img.width; ++x) out.at(x, y) = f(x, y);
  return out;
}

}  // namespace

FloatImage derivative_x(const FloatImage& img) {
  return map_pixels(img, [&](int x, int y) {
    return 0.5f * (img.at(reflect101(x + 1, img.width), y) - img.at(reflect101(x - 1, img.width), y));
  });
}

FloatImage derivative_y(const FloatImage& img) {
  return map_pixels(img, [&](int x, int y) {
    return 0.5f * (img.at(x, reflect101(y + 1, img.height)) - img.at(x, reflect101(y - 1, img.height)));
  });
}

FloatImage derivative_xx(const FloatImage& img) {
  return map_pixels(img, [&](int x, int y) {
    return img.at(reflect101(x + 1, img.width), y) - 2.0f * img.at(x, y) +
           img.at(reflect101(x - 1, img.width), y);
  });
}

FloatImage derivative_yy(const FloatImage& img) {
  return map_pixels(img, [&](int x, int y) {
    return img.at(x, reflect101(y + 1, img.height)) - 2.0f * img.at(x, y) +
           img.at(x, reflect101(y - 1, img.height));
  });
}

FloatImage derivative_xy(const FloatImage& img) {
  return map_pixels(img, [&](int x, int y) {
    const int xp = reflect101(x + 1, img.width), xm = reflect101(x - 1, img.width);
    const int yp = reflect101(y + 1, img.height), ym = reflect101(y - 1, img.height);
    return 0.25f * (img.at(xp, yp) + img.at(xm, ym) - img.at(xp, ym) - img.at(xm, yp));
  });
}

}  // namespace scenebias
