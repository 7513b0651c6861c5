#include "scenebias/mser.hpp"

#include <algorithm>
#include <cmath>

namespace scenebias {

namespace {

struct TreeNode {
  int level = 0;
  int area = 0;
  int parent = -1;
  int first_child = -1;
  int next_sibling = -1;
  double variation = 0.0;
  std::vector<int> own;  // pixels that joined the component at this level
};

struct ComponentTree {
  std::vector<TreeNode> nodes;
  int root = -1;
};

// Union-find over pixel indices. parent < 0 means not yet activated.
struct UnionFind {
  std::vector<int> parent;
  std::vector<int> size;

  explicit UnionFind(std::size_t n) : parent(n, -1), size(n, 0) {}

  void activate(int p) {
    parent[p] = p;
    size[p] = 1;
  }
  bool active(int p) const { return parent[p] >= 0; }

  int find(int p) {
    while (parent[p] != p) {
      parent[p] = parent[parent[p]];
      p = parent[p];
    }
    return p;
  }
};

ComponentTree build_component_tree(const GrayImage& img) {
  const int w = img.width;
  const int h = img.height;
  const int n = w * h;

  std::vector<std::vector<int>> by_value(256);
  for (int i = 0; i < n; ++i) by_value[img.data[i]].push_back(i);

  UnionFind uf(n);
  std::vector<int> node_of(n, -1);       // UF root -> current tree node
  std::vector<int> pending_head(n, -1);  // UF root -> child node list (sibling-linked)
  std::vector<int> pending_tail(n, -1);

  ComponentTree tree;
  tree.nodes.reserve(1024);

  auto push_pending = [&](int root, int node) {
    if (pending_head[root] == -1) {
      pending_head[root] = pending_tail[root] = node;
    } else {
      tree.nodes[pending_tail[root]].next_sibling = node;
      pending_tail[root] = node;
    }
  };
  // A component touched during the current level loses its current node; the
  // node becomes a child of whatever node this level produces for it.
  auto demote = [&](int root) {
    if (node_of[root] != -1) {
      push_pending(root, node_of[root]);
      node_of[root] = -1;
    }
  };

  std::vector<int> touched;  // roots that changed during the current level
  for (int value = 0; value < 256; ++value) {
    const std::vector<int>& pixels = by_value[value];
    if (pixels.empty()) continue;

    for (int p : pixels) uf.activate(p);
    for (int p : pixels) {
      const int x = p % w;
      const int y = p / w;
      const int neighbors[4] = {x > 0 ? p - 1 : -1, x + 1 < w ? p + 1 : -1,
                                y > 0 ? p - w : -1, y + 1 < h ? p + w : -1};
      for (int q : neighbors) {
        if (q < 0 || !uf.active(q)) continue;
        int rp = uf.find(p);
        int rq = uf.find(q);
        if (rp == rq) continue;
        demote(rp);
        demote(rq);
        if (uf.size[rp] < uf.size[rq]) std::swap(rp, rq);
        uf.parent[rq] = rp;
        uf.size[rp] += uf.size[rq];
        if (pending_head[rq] != -1) {
          if (pending_head[rp] == -1) {
            pending_head[rp] = pending_head[rq];
            pending_tail[rp] = pending_tail[rq];
          } else {
            tree.nodes[pending_tail[rp]].next_sibling = pending_head[rq];
            pending_tail[rp] = pending_tail[rq];
          }
          pending_head[rq] = pending_tail[rq] = -1;
        }
      }
    }

    // Materialize one node per component that changed at this level. Every
    // root reachable from a level pixel was demoted by activation or union.
    touched.clear();
    for (int p : pixels) touched.push_back(uf.find(p));
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());

    for (int r : touched) {
      const int idx = static_cast<int>(tree.nodes.size());
      TreeNode node;
      node.level = value;
      node.area = uf.size[r];
      node.first_child = pending_head[r];
      tree.nodes.push_back(std::move(node));
      for (int c = pending_head[r]; c != -1; c = tree.nodes[c].next_sibling)
        tree.nodes[c].parent = idx;
      pending_head[r] = pending_tail[r] = -1;
      node_of[r] = idx;
    }
    for (int p : pixels) tree.nodes[node_of[uf.find(p)]].own.push_back(p);
  }

  if (!tree.nodes.empty()) {
    // Whole image is one component once every pixel is active.
    tree.root = node_of[uf.find(0)];
  }
  return tree;
}

void compute_variations(ComponentTree& tree, int delta) {
  for (TreeNode& node : tree.nodes) {
    int a = static_cast<int>(&node - tree.nodes.data());
    while (tree.nodes[a].parent != -1 && tree.nodes[tree.nodes[a].parent].level <= node.level + delta)
      a = tree.nodes[a].parent;
    node.variation = static_cast<double>(tree.nodes[a].area - node.area) / node.area;
  }
}

std::vector<int> collect_pixels(const ComponentTree& tree, int node) {
  std::vector<int> pixels;
  std::vector<int> stack{node};
  while (!stack.empty()) {
    const int idx = stack.back();
    stack.pop_back();
    const TreeNode& n = tree.nodes[idx];
    pixels.insert(pixels.end(), n.own.begin(), n.own.end());
    for (int c = n.first_child; c != -1; c = tree.nodes[c].next_sibling) stack.push_back(c);
  }
  std::sort(pixels.begin(), pixels.end());
  return pixels;
}

}  // namespace

std::vector<MserRegion> mser_pixel_regions(const GrayImage& img, const MserSettings& settings,
                                           bool dark) {
  GrayImage work = img;
  if (!dark)
    for (auto& v : work.data) v = static_cast<std::uint8_t>(255 - v);

  ComponentTree tree = build_component_tree(work);
  compute_variations(tree, settings.delta);

  const double max_area = settings.max_area_ratio * static_cast<double>(work.pixel_count());
  std::vector<MserRegion> regions;
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const TreeNode& node = tree.nodes[i];
    if (node.area < settings.min_area || node.area > max_area) continue;
    if (node.variation > settings.max_variation) continue;
    if (node.parent != -1 && node.variation > tree.nodes[node.parent].variation) continue;
    if (node.first_child != -1) {
      bool beats_a_child = false;
      for (int c = node.first_child; c != -1; c = tree.nodes[c].next_sibling) {
        if (node.variation < tree.nodes[c].variation) {
          beats_a_child = true;
          break;
        }
      }
      if (!beats_a_child) continue;
    }
    MserRegion region;
    region.dark = dark;
    region.level = node.level;
    region.area = node.area;
    region.variation = node.variation;
    region.pixels = collect_pixels(tree, static_cast<int>(i));
    regions.push_back(std::move(region));
  }
  return regions;
}

std::optional<InterestRegion> ellipse_from_pixels(const std::vector<int>& pixels, int width,
                                                  double strength) {
  if (pixels.empty()) return std::nullopt;
  const double n = static_cast<double>(pixels.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  for (int p : pixels) {
    const double x = p % width;
    const double y = p / width;
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    syy += y * y;
  }
  const double mx = sx / n;
  const double my = sy / n;
  const double cxx = sxx / n - mx * mx;
  const double cxy = sxy / n - mx * my;
  const double cyy = syy / n - my * my;

  // Boundary at two Mahalanobis units: shape matrix = (4 * covariance)^-1.
  const double det = cxx * cyy - cxy * cxy;
  if (det <= 1e-9) return std::nullopt;
  const double scale = 1.0 / (4.0 * det);
  InterestRegion r;
  r.x = mx;
  r.y = my;
  r.a = cyy * scale;
  r.b = -cxy * scale;
  r.c = cxx * scale;
  r.strength = strength;
  if (!r.positive_definite()) return std::nullopt;
  return r;
}

std::vector<InterestRegion> mser(const GrayImage& img, const MserSettings& settings) {
  std::vector<InterestRegion> out;
  for (bool dark : {true, false}) {
    for (const MserRegion& region : mser_pixel_regions(img, settings, dark)) {
      // More stable regions rank stronger.
      if (auto ellipse = ellipse_from_pixels(region.pixels, img.width, -region.variation))
        out.push_back(*ellipse);
    }
  }
  sort_regions(out);
  return out;
}

}  // namespace scenebias
