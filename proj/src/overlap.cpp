#include "scenebias/overlap.hpp"

#include <algorithm>
#include <cmath>

namespace scenebias {

double ellipse_area(const InterestRegion& r) {
  const double det = r.a * r.c - r.b * r.b;
  return 3.141592653589793 / std::sqrt(det);
}

InterestRegion map_region(const InterestRegion& r, const Homography& h) {
  if (h.is_identity()) return r;

  const Point2 center = h.apply({r.x, r.y});
  const auto j = h.jacobian({r.x, r.y});
  const double det = j[0] * j[3] - j[1] * j[2];
  // inv(J), then M' = inv(J)^T M inv(J)
  const double i0 = j[3] / det, i1 = -j[1] / det, i2 = -j[2] / det, i3 = j[0] / det;
  const double m0 = r.a * i0 + r.b * i2;
  const double m1 = r.a * i1 + r.b * i3;
  const double m2 = r.b * i0 + r.c * i2;
  const double m3 = r.b * i1 + r.c * i3;

  InterestRegion out = r;
  out.x = center.x;
  out.y = center.y;
  out.a = i0 * m0 + i2 * m2;
  out.b = i0 * m1 + i2 * m3;
  out.c = i1 * m1 + i3 * m3;
  return out;
}

namespace {

constexpr int kStrips = 2048;

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool empty = true;
};

// Horizontal chord of the ellipse at absolute height Y.
Interval chord(const InterestRegion& r, double yy) {
  const double w = yy - r.y;
  const double disc = r.a - (r.a * r.c - r.b * r.b) * w * w;
  if (disc < 0.0) return {};
  const double s = std::sqrt(disc);
  return {r.x + (-r.b * w - s) / r.a, r.x + (-r.b * w + s) / r.a, false};
}

double half_height(const InterestRegion& r) {
  return std::sqrt(r.a / (r.a * r.c - r.b * r.b));
}

}  // namespace

double overlap_error(const InterestRegion& r1, const InterestRegion& r2, const Homography& h) {
  const InterestRegion m1 = map_region(r1, h);

  const double lo = std::min(m1.y - half_height(m1), r2.y - half_height(r2));
  const double hi = std::max(m1.y + half_height(m1), r2.y + half_height(r2));
  const double dy = (hi - lo) / kStrips;

  double inter = 0.0;
  double uni = 0.0;
  for (int k = 0; k < kStrips; ++k) {
    const double yy = lo + (k + 0.5) * dy;
    const Interval c1 = chord(m1, yy);
    const Interval c2 = chord(r2, yy);
    const double len1 = c1.empty ? 0.0 : c1.hi - c1.lo;
    const double len2 = c2.empty ? 0.0 : c2.hi - c2.lo;
    double both = 0.0;
    if (!c1.empty && !c2.empty)
      both = std::max(0.0, std::min(c1.hi, c2.hi) - std::max(c1.lo, c2.lo));
    inter += both * dy;
    uni += (len1 + len2 - both) * dy;
  }
  if (uni <= 0.0) return 1.0;
  return std::clamp(1.0 - inter / uni, 0.0, 1.0);
}

}  // namespace scenebias
