#pragma once

#include <array>

namespace scenebias {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

/// Row-major 3x3 homography mapping reference coordinates to test
/// coordinates. Identity for the photometric and blur datasets.
struct Homography {
  std::array<double, 9> m{1, 0, 0, 0, 1, 0, 0, 0, 1};

  static Homography identity() { return {}; }
  bool is_identity() const;

  double determinant() const;
  Homography inverse() const;  // throws ArgumentError when singular

  Point2 apply(const Point2& p) const;

  /// Jacobian of the projective map at p: {dxx, dxy, dyx, dyy}.
  std::array<double, 4> jacobian(const Point2& p) const;
};

}  // namespace scenebias
