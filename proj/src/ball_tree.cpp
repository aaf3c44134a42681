#include "dtmm/ball_tree.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <ostream>

namespace dtmm {

namespace {

constexpr double kDegenerateCentroidNorm = 1e-12;

double clamped_angle(std::span<const double> a, std::span<const double> b) {
  return std::acos(std::clamp(dot(a, b), -1.0, 1.0));
}

/// Dimension with the largest coordinate range over the given points; ties go
/// to the lowest dimension index.
std::size_t max_range_dim(std::span<const std::size_t> indices, const UnitPointSet& points) {
  const std::size_t dim = points.dim;
  std::size_t best_dim = 0;
  double best_range = -1.0;
  for (std::size_t k = 0; k < dim; ++k) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (std::size_t idx : indices) {
      const double v = points.point(idx)[k];
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    const double range = hi - lo;
    if (range > best_range) {
      best_range = range;
      best_dim = k;
    }
  }
  return best_dim;
}

/// Sorts the index range by the max-range coordinate (original index breaks
/// value ties, so median ties fill the left side deterministically) and
/// returns the split position: ceil(n/2) elements on the left.
std::size_t split_sorted(std::span<std::size_t> indices, const UnitPointSet& points) {
  const std::size_t k = max_range_dim(indices, points);
  std::sort(indices.begin(), indices.end(), [&](std::size_t a, std::size_t b) {
    const double va = points.point(a)[k], vb = points.point(b)[k];
    return va < vb || (va == vb && a < b);
  });
  return (indices.size() + 1) / 2;
}

}  // namespace

std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> partition(
    std::span<const std::size_t> indices, const UnitPointSet& points, std::size_t leaf_limit) {
  if (indices.empty()) throw std::invalid_argument("partition: empty index list");
  if (indices.size() <= leaf_limit) return std::nullopt;

  std::vector<std::size_t> order(indices.begin(), indices.end());
  const std::size_t mid = split_sorted(order, points);
  std::vector<std::size_t> left(order.begin(), order.begin() + mid);
  std::vector<std::size_t> right(order.begin() + mid, order.end());
  return std::make_pair(std::move(left), std::move(right));
}

BallTree BallTree::build(const UnitPointSet& points, std::size_t leaf_size) {
  if (points.size() == 0) throw std::invalid_argument("BallTree::build: empty point set");
  if (leaf_size == 0) throw std::invalid_argument("BallTree::build: leaf_size must be >= 1");

  BallTree tree;
  tree.points_ = &points;
  tree.dim_ = points.dim;
  tree.leaf_size_ = leaf_size;
  tree.point_order_.resize(points.size());
  std::iota(tree.point_order_.begin(), tree.point_order_.end(), std::size_t{0});
  tree.nodes_.reserve(2 * points.size());
  tree.centroids_.reserve(2 * points.size() * points.dim);

  const std::size_t dim = points.dim;

  // Iterative construction; each stack entry is a node whose range is final
  // but whose children are pending.
  struct Pending {
    std::size_t node_id;
  };
  std::vector<Pending> stack;

  auto make_node = [&](std::size_t begin, std::size_t end) -> std::size_t {
    const std::size_t id = tree.nodes_.size();
    BallNode n;
    n.begin = begin;
    n.end = end;
    tree.nodes_.push_back(n);
    tree.centroids_.resize((id + 1) * dim, 0.0);

    double* centroid = tree.centroids_.data() + id * dim;
    for (std::size_t p = begin; p < end; ++p) {
      auto pt = points.point(tree.point_order_[p]);
      for (std::size_t k = 0; k < dim; ++k) centroid[k] += pt[k];
    }
    const double inv_count = 1.0 / static_cast<double>(end - begin);
    for (std::size_t k = 0; k < dim; ++k) centroid[k] *= inv_count;

    const double mean_norm = norm({centroid, dim});
    if (mean_norm < kDegenerateCentroidNorm) {
      // Antipodal degeneracy: the mean carries no direction.  Use the node's
      // first point as the center.
      auto first = points.point(tree.point_order_[begin]);
      std::copy(first.begin(), first.end(), centroid);
    } else {
      const double inv = 1.0 / mean_norm;
      for (std::size_t k = 0; k < dim; ++k) centroid[k] *= inv;
    }

    double half_angle = 0.0;
    for (std::size_t p = begin; p < end; ++p) {
      auto pt = points.point(tree.point_order_[p]);
      half_angle = std::max(half_angle, clamped_angle(pt, {centroid, dim}));
    }
    tree.nodes_[id].half_angle = half_angle;
    return id;
  };

  make_node(0, points.size());
  stack.push_back({0});
  while (!stack.empty()) {
    const std::size_t id = stack.back().node_id;
    stack.pop_back();
    const std::size_t begin = tree.nodes_[id].begin, end = tree.nodes_[id].end;
    if (end - begin <= leaf_size) continue;

    const std::size_t mid =
        begin + split_sorted({tree.point_order_.data() + begin, end - begin}, points);
    const std::size_t left = make_node(begin, mid);
    const std::size_t right = make_node(mid, end);
    tree.nodes_[id].left = static_cast<std::int32_t>(left);
    tree.nodes_[id].right = static_cast<std::int32_t>(right);
    stack.push_back({right});
    stack.push_back({left});
  }
  return tree;
}

BallTree::DepthStats BallTree::depth_stats() const {
  DepthStats stats;
  stats.node_count = nodes_.size();
  stats.min_leaf_depth = std::numeric_limits<std::size_t>::max();

  std::vector<std::pair<std::size_t, std::size_t>> stack{{0, 0}};
  while (!stack.empty()) {
    auto [id, depth] = stack.back();
    stack.pop_back();
    const BallNode& n = nodes_[id];
    if (n.is_leaf()) {
      ++stats.leaf_count;
      stats.min_leaf_depth = std::min(stats.min_leaf_depth, depth);
      stats.max_leaf_depth = std::max(stats.max_leaf_depth, depth);
    } else {
      stack.push_back({static_cast<std::size_t>(n.right), depth + 1});
      stack.push_back({static_cast<std::size_t>(n.left), depth + 1});
    }
  }
  return stats;
}

void BallTree::dump(std::ostream& out) const {
  std::vector<std::pair<std::size_t, std::size_t>> stack{{0, 0}};
  while (!stack.empty()) {
    auto [id, depth] = stack.back();
    stack.pop_back();
    const BallNode& n = nodes_[id];
    out << depth << ' ' << n.count() << ' ' << n.half_angle << '\n';
    if (!n.is_leaf()) {
      stack.push_back({static_cast<std::size_t>(n.right), depth + 1});
      stack.push_back({static_cast<std::size_t>(n.left), depth + 1});
    }
  }
}

}  // namespace dtmm
