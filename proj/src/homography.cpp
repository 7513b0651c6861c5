#include "scenebias/homography.hpp"

#include <cmath>

#include "scenebias/errors.hpp"

namespace scenebias {

bool Homography::is_identity() const {
  static constexpr std::array<double, 9> id{1, 0, 0, 0, 1, 0, 0, 0, 1};
  return m == id;
}

double Homography::determinant() const {
  return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
         m[2] * (m[3] * m[7] - m[4] * m[6]);
}

Homography Homography::inverse() const {
  const double det = determinant();
  if (det == 0.0 || !std::isfinite(det))
    throw ArgumentError("homography is singular and cannot be inverted");
  const double inv = 1.0 / det;
  Homography out;
  out.m = {(m[4] * m[8] - m[5] * m[7]) * inv, (m[2] * m[7] - m[1] * m[8]) * inv,
           (m[1] * m[5] - m[2] * m[4]) * inv, (m[5] * m[6] - m[3] * m[8]) * inv,
           (m[0] * m[8] - m[2] * m[6]) * inv, (m[2] * m[3] - m[0] * m[5]) * inv,
           (m[3] * m[7] - m[4] * m[6]) * inv, (m[1] * m[6] - m[0] * m[7]) * inv,
           (m[0] * m[4] - m[1] * m[3]) * inv};
  return out;
}

Point2 Homography::apply(const Point2& p) const {
  const double w = m[6] * p.x + m[7] * p.y + m[8];
  return {(m[0] * p.x + m[1] * p.y + m[2]) / w, (m[3] * p.x + m[4] * p.y + m[5]) / w};
}

std::array<double, 4> Homography::jacobian(const Point2& p) const {
  const double u = m[0] * p.x + m[1] * p.y + m[2];
  const double v = m[3] * p.x + m[4] * p.y + m[5];
  const double w = m[6] * p.x + m[7] * p.y + m[8];
  const double w2 = w * w;
  return {(m[0] * w - u * m[6]) / w2, (m[1] * w - u * m[7]) / w2,
          (m[3] * w - v * m[6]) / w2, (m[4] * w - v * m[7]) / w2};
}

}  // namespace scenebias
