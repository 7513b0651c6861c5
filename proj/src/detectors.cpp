#include "scenebias/detectors.hpp"

#include <algorithm>
#include <cmath>

#include "scenebias/errors.hpp"
#include "scenebias/scale_space.hpp"

namespace scenebias {

namespace {

// Vertex offset of the parabola through f(-1)=a, f(0)=b, f(1)=c, clamped to
// half a sample. Only meaningful around a maximum; flat or convex samples
// yield no offset.
double parabola_offset(double a, double b, double c) {
  const double denom = a - 2.0 * b + c;
  if (denom >= 0.0) return 0.0;
  return std::clamp(0.5 * (a - c) / denom, -0.5, 0.5);
}

// 8-neighbor maximum; on an exactly tied plateau the raster-first sample
// wins, so plateaus report once instead of vanishing. Used by the
// scale-space detectors, whose float responses can tie on replicated data.
bool spatial_max(const FloatImage& img, int x, int y, float v) {
  for (int dy = -1; dy <= 1; ++dy)
    for (int dx = -1; dx <= 1; ++dx) {
      if (dx == 0 && dy == 0) continue;
      const float n = img.at(x + dx, y + dy);
      if (v < n) return false;
      if (v == n && (dy < 0 || (dy == 0 && dx < 0))) return false;
    }
  return true;
}

// Strict maximum for the box-filter detector: its responses are exact in the
// underlying integer sums, so ties are dropped identically regardless of
// image orientation.
bool strict_spatial_max(const FloatImage& img, int x, int y, float v) {
  for (int dy = -1; dy <= 1; ++dy)
    for (int dx = -1; dx <= 1; ++dx) {
      if ((dx != 0 || dy != 0) && v <= img.at(x + dx, y + dy)) return false;
    }
  return true;
}

// Shared by the two scale-space detectors: spatial maxima of a per-level
// response, kept only where the absolute scale-normalized Laplacian peaks
// across neighboring levels (characteristic scale).
std::vector<InterestRegion> laplace_scale_select(const std::vector<FloatImage>& responses,
                                                 const std::vector<FloatImage>& logs,
                                                 const std::vector<double>& sigmas, double step,
                                                 double response_threshold, double log_threshold,
                                                 double kappa, bool subpixel) {
  std::vector<InterestRegion> regions;
  const int levels = static_cast<int>(logs.size());
  for (int i = 1; i + 1 < levels; ++i) {
    const FloatImage& resp = responses[i];
    if (resp.width == 0) continue;
    for (int y = 1; y + 1 < resp.height; ++y) {
      for (int x = 1; x + 1 < resp.width; ++x) {
        const float v = resp.at(x, y);
        if (v <= response_threshold || !spatial_max(resp, x, y, v)) continue;

        const double l0 = std::abs(logs[i - 1].at(x, y));
        const double l1 = std::abs(logs[i].at(x, y));
        const double l2 = std::abs(logs[i + 1].at(x, y));
        // Characteristic scale: |LoG| argmax over the measurable range,
        // closed-interval at the boundary levels so profiles still rising at
        // an end (ideal corners at the fine end, oversized blobs at the
        // coarse end) keep the boundary scale.
        const bool fine_ok = (i == 1) || l1 > l0;
        const bool coarse_ok = (i + 2 == levels) || l1 > l2;
        if (l1 < log_threshold || !fine_ok || !coarse_ok) continue;

        double dx = 0.0, dy = 0.0, ds = 0.0;
        if (subpixel) {
          dx = parabola_offset(resp.at(x - 1, y), v, resp.at(x + 1, y));
          dy = parabola_offset(resp.at(x, y - 1), v, resp.at(x, y + 1));
          ds = parabola_offset(l0, l1, l2);
        }
        const double sigma = sigmas[i] * std::pow(step, ds);
        regions.push_back(InterestRegion::circle(x + dx, y + dy, kappa * sigma, v));
      }
    }
  }
  sort_regions(regions);
  return regions;
}

FloatImage scale_normalized_log(const FloatImage& level, double sigma) {
  const FloatImage lxx = derivative_xx(level);
  const FloatImage lyy = derivative_yy(level);
  FloatImage out(level.width, level.height);
  const float s2 = static_cast<float>(sigma * sigma);
  for (std::size_t i = 0; i < out.data.size(); ++i) out.data[i] = s2 * (lxx.data[i] + lyy.data[i]);
  return out;
}

// Detection levels are sigma0 * step^(0..levels-1); one bookend level on each
// side exists only to complete the Laplacian triples.
int bookended_count(const PyramidSettings& pyr) { return pyr.levels + 2; }
double bookended_sigma0(const PyramidSettings& pyr) { return pyr.sigma0 / pyr.step; }

}  // namespace

std::vector<InterestRegion> harris_laplace(const GrayImage& img,
                                           const HarrisLaplaceSettings& settings) {
  const PyramidSettings& pyr = settings.pyramid;
  const int count = bookended_count(pyr);
  const ScalePyramid smooth = build_pyramid(img, bookended_sigma0(pyr), pyr.step, count);
  const ScalePyramid deriv =
      build_pyramid(img, bookended_sigma0(pyr), pyr.step, count, settings.derivative_scale);

  std::vector<FloatImage> logs(count);
  std::vector<FloatImage> responses(count);
  for (int i = 0; i < count; ++i) {
    const double sigma_i = smooth.sigmas[i];
    logs[i] = scale_normalized_log(smooth.levels[i], sigma_i);
    if (i == 0 || i + 1 == count) continue;

    const FloatImage gx = derivative_x(deriv.levels[i]);
    const FloatImage gy = derivative_y(deriv.levels[i]);
    FloatImage pxx(img.width, img.height), pxy(img.width, img.height), pyy(img.width, img.height);
    for (std::size_t p = 0; p < gx.data.size(); ++p) {
      pxx.data[p] = gx.data[p] * gx.data[p];
      pxy.data[p] = gx.data[p] * gy.data[p];
      pyy.data[p] = gy.data[p] * gy.data[p];
    }
    const FloatImage sxx = gaussian_smooth(pxx, sigma_i);
    const FloatImage sxy = gaussian_smooth(pxy, sigma_i);
    const FloatImage syy = gaussian_smooth(pyy, sigma_i);

    const double sigma_d = settings.derivative_scale * sigma_i;
    const float norm = static_cast<float>(sigma_d * sigma_d * sigma_d * sigma_d);
    FloatImage resp(img.width, img.height);
    for (std::size_t p = 0; p < resp.data.size(); ++p) {
      const float det = sxx.data[p] * syy.data[p] - sxy.data[p] * sxy.data[p];
      const float trace = sxx.data[p] + syy.data[p];
      resp.data[p] = norm * (det - static_cast<float>(settings.k) * trace * trace);
    }
    responses[i] = std::move(resp);
  }
  return laplace_scale_select(responses, logs, smooth.sigmas, pyr.step, settings.corner_threshold,
                              settings.laplace_threshold, settings.kappa, settings.subpixel);
}

std::vector<InterestRegion> hessian_laplace(const GrayImage& img,
                                            const HessianLaplaceSettings& settings) {
  const PyramidSettings& pyr = settings.pyramid;
  const int count = bookended_count(pyr);
  const ScalePyramid smooth = build_pyramid(img, bookended_sigma0(pyr), pyr.step, count);

  std::vector<FloatImage> logs(count);
  std::vector<FloatImage> responses(count);
  for (int i = 0; i < count; ++i) {
    const double sigma_i = smooth.sigmas[i];
    logs[i] = scale_normalized_log(smooth.levels[i], sigma_i);
    if (i == 0 || i + 1 == count) continue;

    const FloatImage lxx = derivative_xx(smooth.levels[i]);
    const FloatImage lyy = derivative_yy(smooth.levels[i]);
    const FloatImage lxy = derivative_xy(smooth.levels[i]);
    const float norm = static_cast<float>(sigma_i * sigma_i * sigma_i * sigma_i);
    FloatImage resp(img.width, img.height);
    for (std::size_t p = 0; p < resp.data.size(); ++p)
      resp.data[p] = norm * (lxx.data[p] * lyy.data[p] - lxy.data[p] * lxy.data[p]);
    responses[i] = std::move(resp);
  }
  return laplace_scale_select(responses, logs, smooth.sigmas, pyr.step, settings.det_threshold,
                              settings.laplace_threshold, settings.kappa, settings.subpixel);
}

std::vector<int> fast_hessian_octave_sizes(int octave) {
  // Lobe progression 3,5,7,9 / 5,9,13,17 / 9,17,25,33 / ...
  const int start = (1 << (octave + 1)) + 1;
  const int delta = 1 << (octave + 1);
  std::vector<int> sizes;
  for (int k = 0; k < 4; ++k) sizes.push_back(3 * (start + k * delta));
  return sizes;
}

bool fast_hessian_filter_fits(int width, int height, int x, int y, int filter_size) {
  const int margin = (filter_size - 1) / 2;
  return x - margin >= 0 && y - margin >= 0 && x + margin < width && y + margin < height;
}

BoxHessian fast_hessian_response(const IntegralImage& table, int x, int y, int filter_size) {
  const int lobe = filter_size / 3;
  // Inclusive box [x0..x1] x [y0..y1].
  auto box = [&](int x0, int y0, int x1, int y1) {
    return static_cast<std::int64_t>(table.box_sum(x0, y0, x1 + 1, y1 + 1));
  };

  const int half = (filter_size - 1) / 2;       // full filter reach
  const int narrow = lobe - 1;                  // cross-extent of the bar filters
  const int inner = (lobe - 1) / 2;             // half-height of the middle lobe

  const std::int64_t yy_all = box(x - narrow, y - half, x + narrow, y + half);
  const std::int64_t yy_mid = box(x - narrow, y - inner, x + narrow, y + inner);
  const std::int64_t xx_all = box(x - half, y - narrow, x + half, y + narrow);
  const std::int64_t xx_mid = box(x - inner, y - narrow, x + inner, y + narrow);
  const std::int64_t xy = box(x - lobe, y - lobe, x - 1, y - 1) +
                          box(x + 1, y + 1, x + lobe, y + lobe) -
                          box(x + 1, y - lobe, x + lobe, y - 1) -
                          box(x - lobe, y + 1, x - 1, y + lobe);

  const double inv_area = 1.0 / (static_cast<double>(filter_size) * filter_size);
  BoxHessian h;
  h.dxx = (xx_all - 3 * xx_mid) * inv_area;
  h.dyy = (yy_all - 3 * yy_mid) * inv_area;
  h.dxy = xy * inv_area;
  h.response = h.dxx * h.dyy - 0.81 * h.dxy * h.dxy;
  return h;
}

std::vector<InterestRegion> fast_hessian(const GrayImage& img,
                                         const FastHessianSettings& settings) {
  const IntegralImage table(img);
  std::vector<InterestRegion> regions;

  for (int octave = 0; octave < settings.octaves; ++octave) {
    const std::vector<int> sizes = fast_hessian_octave_sizes(octave);
    const int stride = 1 << octave;
    const int gw = (img.width + stride - 1) / stride;
    const int gh = (img.height + stride - 1) / stride;
    if (gw < 3 || gh < 3) break;

    std::vector<FloatImage> maps;
    for (int size : sizes) {
      FloatImage map(gw, gh, 0.0f);
      for (int gy = 0; gy < gh; ++gy) {
        for (int gx = 0; gx < gw; ++gx) {
          const int x = gx * stride;
          const int y = gy * stride;
          if (!fast_hessian_filter_fits(img.width, img.height, x, y, size)) continue;
          map.at(gx, gy) = static_cast<float>(fast_hessian_response(table, x, y, size).response);
        }
      }
      maps.push_back(std::move(map));
    }

    const int size_delta = sizes[1] - sizes[0];
    for (int si = 1; si + 1 < static_cast<int>(sizes.size()); ++si) {
      const FloatImage& mid = maps[si];
      for (int gy = 1; gy + 1 < gh; ++gy) {
        for (int gx = 1; gx + 1 < gw; ++gx) {
          const float v = mid.at(gx, gy);
          if (v <= settings.response_threshold || !strict_spatial_max(mid, gx, gy, v)) continue;
          bool is_max = true;
          for (int ds = -1; ds <= 1 && is_max; ds += 2) {
            const FloatImage& m = maps[si + ds];
            for (int oy = -1; oy <= 1 && is_max; ++oy)
              for (int ox = -1; ox <= 1; ++ox) {
                if (v <= m.at(gx + ox, gy + oy)) {
                  is_max = false;
                  break;
                }
              }
          }
          if (!is_max) continue;

          double dx = 0.0, dy = 0.0, dsize = 0.0;
          if (settings.subpixel) {
            dx = parabola_offset(mid.at(gx - 1, gy), v, mid.at(gx + 1, gy));
            dy = parabola_offset(mid.at(gx, gy - 1), v, mid.at(gx, gy + 1));
            dsize = parabola_offset(maps[si - 1].at(gx, gy), v, maps[si + 1].at(gx, gy));
          }
          const double size = sizes[si] + dsize * size_delta;
          const double sigma = 1.2 * size / 9.0;
          regions.push_back(InterestRegion::circle((gx + dx) * stride, (gy + dy) * stride,
                                                   settings.kappa * sigma, v));
        }
      }
    }
  }

  // Overlapping octave sizes can report the same sample twice.
  std::sort(regions.begin(), regions.end(), [](const InterestRegion& p, const InterestRegion& q) {
    return std::tie(p.x, p.y, p.a, p.b, p.c, p.strength) <
           std::tie(q.x, q.y, q.a, q.b, q.c, q.strength);
  });
  regions.erase(std::unique(regions.begin(), regions.end()), regions.end());
  sort_regions(regions);
  return regions;
}

std::vector<InterestRegion> detect(const DetectorId& id, const GrayImage& img,
                                   const DetectorSettings& settings) {
  switch (id.kind) {
    case DetectorId::Kind::HarrisLaplace: return harris_laplace(img, settings.harris_laplace);
    case DetectorId::Kind::HessianLaplace: return hessian_laplace(img, settings.hessian_laplace);
    case DetectorId::Kind::Mser: return mser(img, settings.mser);
    case DetectorId::Kind::FastHessian: return fast_hessian(img, settings.fast_hessian);
    case DetectorId::Kind::External:
      throw ConfigError("detector " + id.name() +
                        " is external; its region files must be provided");
  }
  throw ConfigError("unhandled detector id");
}

}  // namespace scenebias
