#include "scenebias/matching.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>

#include "scenebias/errors.hpp"
#include "scenebias/overlap.hpp"

namespace scenebias {

namespace {

// Rescales the region's extent about its own center.
InterestRegion scale_shape(const InterestRegion& r, double s) {
  InterestRegion out = r;
  out.a /= s * s;
  out.b /= s * s;
  out.c /= s * s;
  return out;
}

}  // namespace

std::vector<std::vector<int>> overlap_adjacency(const std::vector<InterestRegion>& ref,
                                                const std::vector<InterestRegion>& test,
                                                const Homography& h, double eps_overlap,
                                                double normalize_radius) {
  if (!(eps_overlap > 0.0 && eps_overlap < 1.0))
    throw ArgumentError("overlap threshold must lie in (0, 1)");
  if (normalize_radius < 0.0)
    throw ArgumentError("normalization radius must be >= 0 (0 disables it)");

  // Sort test centers by x so each reference region only probes a window.
  std::vector<int> order(test.size());
  for (std::size_t j = 0; j < test.size(); ++j) order[j] = static_cast<int>(j);
  std::sort(order.begin(), order.end(), [&](int p, int q) { return test[p].x < test[q].x; });
  std::vector<double> xs(test.size());
  double max_test_radius = 0.0;
  for (std::size_t j = 0; j < test.size(); ++j) {
    xs[j] = test[order[j]].x;
    max_test_radius = std::max(max_test_radius, test[order[j]].max_radius());
  }

  std::vector<std::vector<int>> adjacency(ref.size());
  for (std::size_t i = 0; i < ref.size(); ++i) {
    const InterestRegion mapped = map_region(ref[i], h);
    const double scale = normalize_radius > 0.0 ? normalize_radius / mapped.max_radius() : 1.0;
    const double reach = scale * (mapped.max_radius() + max_test_radius);
    const auto lo = std::lower_bound(xs.begin(), xs.end(), mapped.x - reach);
    const auto hi = std::upper_bound(xs.begin(), xs.end(), mapped.x + reach);
    const InterestRegion probe = scale_shape(mapped, scale);
    for (auto it = lo; it != hi; ++it) {
      const int j = order[it - xs.begin()];
      const double dx = mapped.x - test[j].x;
      const double dy = mapped.y - test[j].y;
      const double limit = scale * (mapped.max_radius() + test[j].max_radius());
      if (dx * dx + dy * dy > limit * limit) continue;
      if (overlap_error(probe, scale_shape(test[j], scale)) < eps_overlap)
        adjacency[i].push_back(j);
    }
    std::sort(adjacency[i].begin(), adjacency[i].end());
  }
  return adjacency;
}

int max_bipartite_matching(const std::vector<std::vector<int>>& adjacency, int right_size,
                           std::vector<int>* left_match_out) {
  const int n_left = static_cast<int>(adjacency.size());
  constexpr int kFree = -1;
  std::vector<int> left_match(n_left, kFree);
  std::vector<int> right_match(right_size, kFree);
  std::vector<int> dist(n_left, 0);
  constexpr int kInf = std::numeric_limits<int>::max();

  auto bfs = [&]() {
    std::queue<int> queue;
    bool found = false;
    for (int u = 0; u < n_left; ++u) {
      if (left_match[u] == kFree) {
        dist[u] = 0;
        queue.push(u);
      } else {
        dist[u] = kInf;
      }
    }
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop();
      for (int v : adjacency[u]) {
        const int w = right_match[v];
        if (w == kFree) {
          found = true;
        } else if (dist[w] == kInf) {
          dist[w] = dist[u] + 1;
          queue.push(w);
        }
      }
    }
    return found;
  };

  std::function<bool(int)> dfs = [&](int u) {
    for (int v : adjacency[u]) {
      const int w = right_match[v];
      if (w == kFree || (dist[w] == dist[u] + 1 && dfs(w))) {
        left_match[u] = v;
        right_match[v] = u;
        return true;
      }
    }
    dist[u] = kInf;
    return false;
  };

  int size = 0;
  while (bfs()) {
    for (int u = 0; u < n_left; ++u)
      if (left_match[u] == kFree && dfs(u)) ++size;
  }
  if (left_match_out) *left_match_out = std::move(left_match);
  return size;
}

std::vector<std::pair<int, int>> correspondences(const std::vector<InterestRegion>& ref,
                                                 const std::vector<InterestRegion>& test,
                                                 const Homography& h, double eps_overlap,
                                                 double normalize_radius) {
  const auto adjacency = overlap_adjacency(ref, test, h, eps_overlap, normalize_radius);
  std::vector<int> left_match;
  max_bipartite_matching(adjacency, static_cast<int>(test.size()), &left_match);

  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < left_match.size(); ++i)
    if (left_match[i] >= 0) pairs.emplace_back(static_cast<int>(i), left_match[i]);
  return pairs;
}

std::vector<std::pair<int, int>> canonical_pairing(const std::vector<InterestRegion>& ref,
                                                   const std::vector<InterestRegion>& test,
                                                   const Homography& h, double eps_overlap) {
  const auto adjacency = overlap_adjacency(ref, test, h, eps_overlap);
  const int right_size = static_cast<int>(test.size());
  const int target = max_bipartite_matching(adjacency, right_size);

  // Fix edges greedily in (ref, test) order; keep a fix only if a maximum
  // matching is still reachable on what remains.
  std::vector<std::pair<int, int>> fixed;
  std::vector<bool> right_used(test.size(), false);

  auto residual_best = [&](std::size_t from) {
    std::vector<std::vector<int>> rest;
    for (std::size_t u = from; u < adjacency.size(); ++u) {
      std::vector<int> row;
      for (int v : adjacency[u])
        if (!right_used[v]) row.push_back(v);
      rest.push_back(std::move(row));
    }
    return max_bipartite_matching(rest, right_size);
  };

  for (std::size_t i = 0; i < adjacency.size(); ++i) {
    for (int j : adjacency[i]) {
      if (right_used[j]) continue;
      right_used[j] = true;
      if (static_cast<int>(fixed.size()) + 1 + residual_best(i + 1) == target) {
        fixed.emplace_back(static_cast<int>(i), j);
        break;
      }
      right_used[j] = false;
    }
  }
  return fixed;
}

}  // namespace scenebias
