#pragma once

#include "scenebias/homography.hpp"
#include "scenebias/regions.hpp"

namespace scenebias {

/// Exact area enclosed by the region boundary: pi / sqrt(ac - b^2).
double ellipse_area(const InterestRegion& r);

/// Maps a region through H using the local affine approximation at the
/// center (exact for affine H, and in particular for the identity).
InterestRegion map_region(const InterestRegion& r, const Homography& h);

/// 1 - area(R1' intersect R2) / area(R1' union R2) with R1' = H(r1).
/// Identical regions give exactly 0, disjoint regions exactly 1.
double overlap_error(const InterestRegion& r1, const InterestRegion& r2,
                     const Homography& h = Homography::identity());

}  // namespace scenebias
