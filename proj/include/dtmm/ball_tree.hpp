#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <utility>

#include "dtmm/matrix.hpp"

namespace dtmm {

/// Node of a ball tree over unit vectors.  Point membership is a contiguous
/// range of BallTree::point_order; children of an internal node partition the
/// parent's range.
struct BallNode {
  std::size_t begin = 0;        // range into BallTree::point_order()
  std::size_t end = 0;
  std::int32_t left = -1;       // child node ids, -1 on leaves
  std::int32_t right = -1;
  double half_angle = 0.0;      // max angle between a member point and the centroid

  bool is_leaf() const { return left < 0; }
  std::size_t count() const { return end - begin; }
};

/// Splits `indices` at the median of the coordinate with the largest range
/// (range ties go to the lowest dimension; points equal to the median fill the
/// left side first).  Returns nothing when |indices| <= leaf_limit.
std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> partition(
    std::span<const std::size_t> indices, const UnitPointSet& points, std::size_t leaf_limit);

class BallTree {
 public:
  /// Recursively partitions until nodes reach leaf_size points.  Each node
  /// gets the normalized mean of its points as centroid and the exact max
  /// angular deviation as half angle.  Throws on an empty point set.
  static BallTree build(const UnitPointSet& points, std::size_t leaf_size = 1);

  const BallNode& node(std::size_t id) const { return nodes_[id]; }
  const BallNode& root() const { return nodes_[0]; }
  std::size_t node_count() const { return nodes_.size(); }

  std::span<const double> centroid(std::size_t id) const {
    return {centroids_.data() + id * dim_, dim_};
  }
  /// Indices into the point set of the points under node `id`.
  std::span<const std::size_t> node_points(std::size_t id) const {
    const BallNode& n = nodes_[id];
    return {point_order_.data() + n.begin, n.count()};
  }
  std::span<const std::size_t> point_order() const { return point_order_; }

  const UnitPointSet& points() const { return *points_; }
  std::size_t leaf_size() const { return leaf_size_; }
  std::size_t dim() const { return dim_; }

  struct DepthStats {
    std::size_t node_count = 0;
    std::size_t leaf_count = 0;
    std::size_t min_leaf_depth = 0;
    std::size_t max_leaf_depth = 0;
  };
  DepthStats depth_stats() const;

  /// Diagnostic dump, one node per line: depth, point count, half angle.
  void dump(std::ostream& out) const;

 private:
  const UnitPointSet* points_ = nullptr;
  std::size_t dim_ = 0;
  std::size_t leaf_size_ = 1;
  std::vector<BallNode> nodes_;
  std::vector<double> centroids_;          // node_count x dim, row per node
  std::vector<std::size_t> point_order_;   // permutation of retained indices
};

}  // namespace dtmm
