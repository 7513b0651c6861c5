#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "scenebias/detectors.hpp"
#include "scenebias/errors.hpp"
#include "testutil.hpp"

using namespace scenebias;

namespace {

double blob_cx(int size) { return (size - 1) / 2.0 + 0.29; }
double blob_cy(int size) { return (size - 1) / 2.0 + 0.41; }

// Center sits off the pixel lattice so responses have a unique maximum.
GrayImage blob_image(int size, double sigma, int background = 30, int amplitude = 150) {
  GrayImage img(size, size, static_cast<std::uint8_t>(background));
  fixtures::add_gaussian_blob(img, blob_cx(size), blob_cy(size), sigma, amplitude);
  return img;
}

double nearest_center_distance(const std::vector<InterestRegion>& regions, double x, double y) {
  double best = 1e18;
  for (const InterestRegion& r : regions)
    best = std::min(best, std::hypot(r.x - x, r.y - y));
  return best;
}

GrayImage rotate90_cw(const GrayImage& img) {
  GrayImage out(img.height, img.width);
  for (int y = 0; y < img.height; ++y)
    for (int x = 0; x < img.width; ++x) out.at(img.height - 1 - y, x) = img.at(x, y);
  return out;
}

void check_region_invariants(const std::vector<InterestRegion>& regions, const GrayImage& img) {
  for (const InterestRegion& r : regions) {
    CHECK(r.positive_definite());
    CHECK(r.x >= 0.0);
    CHECK(r.y >= 0.0);
    CHECK(r.x < img.width);
    CHECK(r.y < img.height);
  }
}

}  // namespace

TEST_CASE("constant images produce no regions") {
  const GrayImage flat(96, 80, 128);
  CHECK(harris_laplace(flat).empty());
  CHECK(hessian_laplace(flat).empty());
  CHECK(fast_hessian(flat).empty());
  CHECK(mser(flat).empty());
}

TEST_CASE("detection is deterministic") {
  const GrayImage img = fixtures::synthetic_scene(128, 96, 21);
  for (const char* name : {"HARLAP", "HESLAP", "MSER", "FASTHESS"}) {
    const DetectorId id = DetectorId::parse(name);
    const auto first = detect(id, img);
    const auto second = detect(id, img);
    CHECK(format_region_text(first) == format_region_text(second));
  }
}

TEST_CASE("detect dispatch covers the roster and rejects external ids") {
  const GrayImage img = fixtures::synthetic_scene(96, 96, 4);
  CHECK(detect(DetectorId::parse("HARLAP"), img).size() == harris_laplace(img).size());
  CHECK(detect(DetectorId::parse("MSER"), img).size() == mser(img).size());
  CHECK_THROWS_AS(detect(DetectorId::parse("EXT:ebr"), img), ConfigError);
}

TEST_CASE("region invariants hold on structured scenes") {
  const GrayImage img = fixtures::synthetic_scene(128, 96, 9);
  for (const char* name : {"HARLAP", "HESLAP", "MSER", "FASTHESS"}) {
    const auto regions = detect(DetectorId::parse(name), img);
    CHECK(!regions.empty());
    check_region_invariants(regions, img);
    for (std::size_t i = 1; i < regions.size(); ++i)
      CHECK(regions[i].strength <= regions[i - 1].strength);
  }
}

TEST_CASE("harris_laplace fires at the corners of a white square") {
  GrayImage img(96, 96, 0);
  fixtures::fill_rect(img, 30, 30, 65, 65, 255);
  const auto regions = harris_laplace(img);
  REQUIRE(!regions.empty());

  const double corners[4][2] = {{30, 30}, {30, 65}, {65, 30}, {65, 65}};
  for (const auto& corner : corners)
    CHECK(nearest_center_distance(regions, corner[0], corner[1]) <= 1.5);

  // Independent check of the fixture: a plain single-scale cornerness scan
  // (integer Sobel products, box window) peaks at those same corners.
  auto sobel = [&](int x, int y, bool horizontal) {
    auto v = [&](int dx, int dy) { return static_cast<int>(img.at(x + dx, y + dy)); };
    return horizontal ? v(1, -1) + 2 * v(1, 0) + v(1, 1) - v(-1, -1) - 2 * v(-1, 0) - v(-1, 1)
                      : v(-1, 1) + 2 * v(0, 1) + v(1, 1) - v(-1, -1) - 2 * v(0, -1) - v(1, -1);
  };
  std::vector<std::pair<double, std::pair<int, int>>> scores;
  for (int y = 4; y < 92; ++y) {
    for (int x = 4; x < 92; ++x) {
      double sxx = 0, sxy = 0, syy = 0;
      for (int dy = -2; dy <= 2; ++dy)
        for (int dx = -2; dx <= 2; ++dx) {
          const double gx = sobel(x + dx, y + dy, true);
          const double gy = sobel(x + dx, y + dy, false);
          sxx += gx * gx;
          sxy += gx * gy;
          syy += gy * gy;
        }
      scores.push_back({sxx * syy - sxy * sxy - 0.04 * (sxx + syy) * (sxx + syy), {x, y}});
    }
  }
  std::sort(scores.rbegin(), scores.rend());
  for (const auto& corner : corners) {
    double best = 1e18;
    for (int i = 0; i < 64; ++i)  // the strongest responses cluster on the 4 corners
      best = std::min(best, std::hypot(scores[i].second.first - corner[0],
                                       scores[i].second.second - corner[1]));
    CHECK(best <= 1.5);
  }
}

TEST_CASE("hessian_laplace recovers the scale of a Gaussian blob") {
  const double blob_sigma = 4.0;
  const GrayImage img = blob_image(96, blob_sigma);
  const auto regions = hessian_laplace(img);
  REQUIRE(!regions.empty());

  // Strongest region near the center carries the characteristic scale.
  const double cx = blob_cx(96), cy = blob_cy(96);
  const InterestRegion* best = nullptr;
  for (const InterestRegion& r : regions)
    if (std::hypot(r.x - cx, r.y - cy) <= 3.0 && (!best || r.strength > best->strength)) best = &r;
  REQUIRE(best != nullptr);

  HessianLaplaceSettings settings;
  const double characteristic = best->max_radius() / settings.kappa;
  CHECK(characteristic >= blob_sigma / settings.pyramid.step);
  CHECK(characteristic <= blob_sigma * settings.pyramid.step);
}

TEST_CASE("characteristic scales double under 2x upsampling") {
  const GrayImage img = blob_image(64, 3.0);
  GrayImage up(128, 128);
  for (int y = 0; y < 128; ++y)
    for (int x = 0; x < 128; ++x) up.at(x, y) = img.at(x / 2, y / 2);

  HessianLaplaceSettings settings;
  auto scale_near_center = [&](const GrayImage& image) {
    const auto regions = hessian_laplace(image, settings);
    REQUIRE(!regions.empty());
    const double c = (image.width - 1) / 2.0;
    const InterestRegion* best = nullptr;
    for (const InterestRegion& r : regions)
      if (std::hypot(r.x - c, r.y - c) <= 4.0 && (!best || r.strength > best->strength)) best = &r;
    REQUIRE(best != nullptr);
    return best->max_radius() / settings.kappa;
  };

  const double ratio = scale_near_center(up) / scale_near_center(img);
  CHECK(ratio >= 2.0 / settings.pyramid.step);
  CHECK(ratio <= 2.0 * settings.pyramid.step);
}

TEST_CASE("detections are covariant with exact 90-degree rotation") {
  // Width/height chosen so the coarse-octave sampling grids of the box
  // detector map onto each other under the rotation.
  const GrayImage img = fixtures::synthetic_scene(129, 97, 33);
  const GrayImage rotated = rotate90_cw(img);

  for (const char* name : {"HARLAP", "HESLAP", "MSER", "FASTHESS"}) {
    CAPTURE(name);
    const DetectorId id = DetectorId::parse(name);
    const auto original = detect(id, img);
    const auto after = detect(id, rotated);
    REQUIRE(!original.empty());
    CHECK(original.size() == after.size());
    for (const InterestRegion& r : original) {
      // (x, y) -> (height - 1 - y, x) under the raster rotation.
      const double rx = img.height - 1 - r.y;
      const double ry = r.x;
      CHECK(nearest_center_distance(after, rx, ry) <= 1.0);
    }
  }
}

TEST_CASE("fast_hessian strongest response sits on a centered blob") {
  const GrayImage img = blob_image(64, 5.0, 40, 160);
  const auto regions = fast_hessian(img);
  REQUIRE(!regions.empty());
  CHECK(std::hypot(regions[0].x - blob_cx(64), regions[0].y - blob_cy(64)) <= 2.0);
}

TEST_CASE("box responses equal direct summation exactly") {
  const GrayImage img = testutil::random_image(48, 40, 2718);
  const IntegralImage table(img);

  for (int size : {9, 15, 21, 27, 39}) {
    const int lobe = size / 3;
    const int half = (size - 1) / 2;
    const int narrow = lobe - 1;
    const int inner = (lobe - 1) / 2;
    for (int y = half; y < img.height - half; y += 3) {
      for (int x = half; x < img.width - half; x += 3) {
        REQUIRE(fast_hessian_filter_fits(img.width, img.height, x, y, size));
        const BoxHessian got = fast_hessian_response(table, x, y, size);

        auto direct = [&](int x0, int y0, int x1, int y1) {
          return static_cast<std::int64_t>(oracles::direct_box_sum(img, x0, y0, x1, y1));
        };
        const double inv = 1.0 / (static_cast<double>(size) * size);
        const double dyy =
            (direct(x - narrow, y - half, x + narrow, y + half) -
             3 * direct(x - narrow, y - inner, x + narrow, y + inner)) * inv;
        const double dxx =
            (direct(x - half, y - narrow, x + half, y + narrow) -
             3 * direct(x - inner, y - narrow, x + inner, y + narrow)) * inv;
        const double dxy = (direct(x - lobe, y - lobe, x - 1, y - 1) +
                            direct(x + 1, y + 1, x + lobe, y + lobe) -
                            direct(x + 1, y - lobe, x + lobe, y - 1) -
                            direct(x - lobe, y + 1, x - 1, y + lobe)) * inv;

        CHECK(got.dxx == dxx);
        CHECK(got.dyy == dyy);
        CHECK(got.dxy == dxy);
        CHECK(got.response == dxx * dyy - 0.81 * dxy * dxy);
      }
    }
  }
}

TEST_CASE("octave filter sizes follow the published progression") {
  CHECK(fast_hessian_octave_sizes(0) == std::vector<int>{9, 15, 21, 27});
  CHECK(fast_hessian_octave_sizes(1) == std::vector<int>{15, 27, 39, 51});
  CHECK(fast_hessian_octave_sizes(2) == std::vector<int>{27, 51, 75, 99});
}
