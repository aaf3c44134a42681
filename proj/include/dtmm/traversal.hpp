#pragma once

#include <cstdint>
#include <vector>

#include "dtmm/ball_tree.hpp"
#include "dtmm/matrix.hpp"

namespace dtmm {

/// Which angular prune rule the traversal applies.
///   Adaptive      beta + gamma <= eps / (|sin a| + |cos a|)
///   Conservative  beta + gamma <= eps / sqrt(2), never prunes where the
///                 adaptive rule would not
enum class PruneRule { Adaptive, Conservative };

struct PruneRuleConfig {
  double epsilon = 0.1;                    // required in (0, sqrt(2))
  PruneRule rule = PruneRule::Adaptive;
};

/// Throws unless 0 < epsilon < sqrt(2).
void validate_epsilon(double epsilon);

/// Operation ledger for a traversal.  scalar_dot_products counts every scalar
/// inner product evaluated: one per node-pair rule check plus one per exact
/// point pair at a leaf-leaf evaluation (each costs D multiplies).
struct TraversalStats {
  std::uint64_t prune_count = 0;
  std::uint64_t leaf_pair_count = 0;
  std::uint64_t scalar_dot_products = 0;
  std::uint64_t node_pairs_visited = 0;
  std::uint64_t pruned_cells = 0;          // output entries filled by prunes

  TraversalStats& operator+=(const TraversalStats& o) {
    prune_count += o.prune_count;
    leaf_pair_count += o.leaf_pair_count;
    scalar_dot_products += o.scalar_dot_products;
    node_pairs_visited += o.node_pairs_visited;
    pruned_cells += o.pruned_cells;
    return *this;
  }
};

/// Angle between two unit centroids, in [0, pi].
double center_angle(std::span<const double> r_center, std::span<const double> q_center);

/// Largest cosine deviation over a node pair: max over the four sign choices
/// of |cos(alpha +- beta +- gamma) - cos(alpha)|.
double prune_error_bound(double alpha, double beta, double gamma);

/// Prune threshold on beta + gamma for a given center angle.
double prune_threshold(double alpha, const PruneRuleConfig& cfg);

/// True when approximating every point pair under (R, Q) by the centroid
/// cosine keeps the error within epsilon.
bool should_prune(const BallTree& row_tree, std::size_t r, const BallTree& col_tree,
                  std::size_t q, const PruneRuleConfig& cfg);

struct TraversalOptions {
  int threads = 1;
  /// When set, incremented per output write; completeness checks expect all
  /// ones afterwards.  Forces sequential traversal.
  DenseMatrix* write_counts = nullptr;
  /// When set, receives the (row node, col node) id of every pruned pair.
  /// Forces sequential traversal.
  std::vector<std::pair<std::size_t, std::size_t>>* pruned_pairs = nullptr;
};

/// Depth-first comparison of two ball trees computing all pairwise cosines.
/// Leaf pairs get exact dot products; pruned pairs get the clamped centroid
/// dot product for every covered entry; otherwise recursion proceeds on
/// (L,L), (L,R), (R,L), (R,R), splitting only the non-leaf side of a mixed
/// pair.  Every output entry is written exactly once.
void dual_tree_compare_nodes(const BallTree& row_tree, const BallTree& col_tree,
                             const PruneRuleConfig& cfg, DenseMatrix& cosines,
                             TraversalStats& stats, const TraversalOptions& opts = {});

}  // namespace dtmm
