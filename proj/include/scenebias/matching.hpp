#pragma once

#include <utility>
#include <vector>

#include "scenebias/homography.hpp"
#include "scenebias/regions.hpp"

namespace scenebias {

/// Maximum-cardinality one-to-one matching between reference and test
/// regions, where a pair is admissible iff overlap_error < eps_overlap.
/// Pairs come back sorted by reference index. The cardinality is the
/// well-defined quantity; the particular pairing is an arbitrary maximum
/// matching (deterministic for fixed inputs).
///
/// normalize_radius > 0 rescales each candidate pair's shapes (about their
/// own centers) so the mapped reference region gets that radius before the
/// overlap test; 0 disables the rescaling.
std::vector<std::pair<int, int>> correspondences(const std::vector<InterestRegion>& ref,
                                                 const std::vector<InterestRegion>& test,
                                                 const Homography& h, double eps_overlap,
                                                 double normalize_radius = 0.0);

/// Lexicographically smallest maximum matching by (ref index, test index).
/// Used when a pairing itself is serialized; O(V * E) slower than
/// correspondences.
std::vector<std::pair<int, int>> canonical_pairing(const std::vector<InterestRegion>& ref,
                                                   const std::vector<InterestRegion>& test,
                                                   const Homography& h, double eps_overlap);

/// Maximum matching size on an explicit bipartite adjacency (Hopcroft-Karp).
int max_bipartite_matching(const std::vector<std::vector<int>>& adjacency, int right_size,
                           std::vector<int>* left_match = nullptr);

/// Admissible-pair adjacency under the overlap criterion; candidate pairs
/// are pruned by center distance before the exact overlap test.
std::vector<std::vector<int>> overlap_adjacency(const std::vector<InterestRegion>& ref,
                                                const std::vector<InterestRegion>& test,
                                                const Homography& h, double eps_overlap,
                                                double normalize_radius = 0.0);

}  // namespace scenebias
