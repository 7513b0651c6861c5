#pragma once

#include "scenebias/image.hpp"
#include "scenebias/mser.hpp"
#include "scenebias/regions.hpp"

namespace scenebias {

struct PyramidSettings {
  double sigma0 = 1.6;
  double step = 1.2599210498948732;  // 2^(1/3)
  int levels = 13;
};

struct HarrisLaplaceSettings {
  PyramidSettings pyramid;
  double k = 0.04;
  double derivative_scale = 0.7;  // sigma_D / sigma_I
  double corner_threshold = 500.0;
  double laplace_threshold = 5.0;
  double kappa = 3.0;  // reported radius = kappa * characteristic sigma
  bool subpixel = true;
};

struct HessianLaplaceSettings {
  PyramidSettings pyramid;
  double det_threshold = 50.0;
  double laplace_threshold = 5.0;
  double kappa = 3.0;
  bool subpixel = true;
};

struct FastHessianSettings {
  int octaves = 3;
  double response_threshold = 10.0;
  double kappa = 3.0;
  bool subpixel = true;
};

struct DetectorSettings {
  HarrisLaplaceSettings harris_laplace;
  HessianLaplaceSettings hessian_laplace;
  MserSettings mser;
  FastHessianSettings fast_hessian;
};

/// Multi-scale Harris corners with Laplacian characteristic-scale selection.
std::vector<InterestRegion> harris_laplace(const GrayImage& img,
                                           const HarrisLaplaceSettings& settings = {});

/// Multi-scale Hessian-determinant blobs with Laplacian scale selection.
std::vector<InterestRegion> hessian_laplace(const GrayImage& img,
                                            const HessianLaplaceSettings& settings = {});

/// SURF-style box-filter Hessian over an integral image, 3x3x3 non-maximum
/// suppression inside each octave.
std::vector<InterestRegion> fast_hessian(const GrayImage& img,
                                         const FastHessianSettings& settings = {});

/// Dispatch by detector id. External ids cannot be computed natively and
/// raise ConfigError.
std::vector<InterestRegion> detect(const DetectorId& id, const GrayImage& img,
                                   const DetectorSettings& settings = {});

/// Area-normalized box responses at one sample, exposed so tests can check
/// the integral-image path against direct summation.
struct BoxHessian {
  double dxx = 0.0;
  double dyy = 0.0;
  double dxy = 0.0;
  double response = 0.0;
};

bool fast_hessian_filter_fits(int width, int height, int x, int y, int filter_size);
BoxHessian fast_hessian_response(const IntegralImage& table, int x, int y, int filter_size);

/// Filter side lengths of one octave (4 sizes, uniform spacing).
std::vector<int> fast_hessian_octave_sizes(int octave);

}  // namespace scenebias
