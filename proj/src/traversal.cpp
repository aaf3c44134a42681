#include "dtmm/traversal.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <stdexcept>

namespace dtmm {

void validate_epsilon(double epsilon) {
  if (!(epsilon > 0.0) || !(epsilon < std::sqrt(2.0)))
    throw std::invalid_argument("epsilon must lie in (0, sqrt(2))");
}

double center_angle(std::span<const double> r_center, std::span<const double> q_center) {
  return std::acos(std::clamp(dot(r_center, q_center), -1.0, 1.0));
}

double prune_error_bound(double alpha, double beta, double gamma) {
  const double base = std::cos(alpha);
  double worst = 0.0;
  for (double sb : {-1.0, 1.0})
    for (double sg : {-1.0, 1.0})
      worst = std::max(worst, std::abs(std::cos(alpha + sb * beta + sg * gamma) - base));
  return worst;
}

double prune_threshold(double alpha, const PruneRuleConfig& cfg) {
  if (cfg.rule == PruneRule::Conservative) return cfg.epsilon / std::sqrt(2.0);
  return cfg.epsilon / (std::abs(std::sin(alpha)) + std::abs(std::cos(alpha)));
}

bool should_prune(const BallTree& row_tree, std::size_t r, const BallTree& col_tree,
                  std::size_t q, const PruneRuleConfig& cfg) {
  const double alpha = center_angle(row_tree.centroid(r), col_tree.centroid(q));
  const double spread = row_tree.node(r).half_angle + col_tree.node(q).half_angle;
  return spread <= prune_threshold(alpha, cfg);
}

namespace {

struct Traversal {
  const BallTree& rows;
  const BallTree& cols;
  PruneRuleConfig cfg;
  DenseMatrix& cosines;
  const TraversalOptions& opts;
  int fork_levels;  // recursion levels that spawn async child-pair tasks

  void fill(std::size_t r, std::size_t q, double value, TraversalStats& stats) const {
    auto row_ids = rows.node_points(r);
    auto col_ids = cols.node_points(q);
    for (std::size_t i : row_ids)
      for (std::size_t j : col_ids) {
        cosines(i, j) = value;
        if (opts.write_counts) (*opts.write_counts)(i, j) += 1.0;
      }
    stats.pruned_cells += row_ids.size() * col_ids.size();
  }

  void leaf_pair(std::size_t r, std::size_t q, TraversalStats& stats) const {
    auto row_ids = rows.node_points(r);
    auto col_ids = cols.node_points(q);
    for (std::size_t i : row_ids) {
      auto u = rows.points().point(i);
      for (std::size_t j : col_ids) {
        cosines(i, j) = dot(u, cols.points().point(j));
        if (opts.write_counts) (*opts.write_counts)(i, j) += 1.0;
      }
    }
    stats.leaf_pair_count += 1;
    stats.scalar_dot_products += row_ids.size() * col_ids.size();
  }

  void compare(std::size_t r, std::size_t q, TraversalStats& stats, int depth) const {
    stats.node_pairs_visited += 1;
    const BallNode& rn = rows.node(r);
    const BallNode& qn = cols.node(q);

    if (rn.is_leaf() && qn.is_leaf()) {
      leaf_pair(r, q, stats);
      return;
    }

    const double center_dot =
        std::clamp(dot(rows.centroid(r), cols.centroid(q)), -1.0, 1.0);
    stats.scalar_dot_products += 1;
    const double alpha = std::acos(center_dot);
    if (rn.half_angle + qn.half_angle <= prune_threshold(alpha, cfg)) {
      fill(r, q, center_dot, stats);
      stats.prune_count += 1;
      if (opts.pruned_pairs) opts.pruned_pairs->emplace_back(r, q);
      return;
    }

    if (rn.is_leaf()) {
      compare(r, qn.left, stats, depth + 1);
      compare(r, qn.right, stats, depth + 1);
      return;
    }
    if (qn.is_leaf()) {
      compare(rn.left, q, stats, depth + 1);
      compare(rn.right, q, stats, depth + 1);
      return;
    }

    if (depth < fork_levels) {
      // The four child rectangles are disjoint, so the tasks share no output.
      TraversalStats s0, s1, s2, s3;
      auto f0 = std::async(std::launch::async,
                           [&] { compare(rn.left, qn.left, s0, depth + 1); });
      auto f1 = std::async(std::launch::async,
                           [&] { compare(rn.left, qn.right, s1, depth + 1); });
      auto f2 = std::async(std::launch::async,
                           [&] { compare(rn.right, qn.left, s2, depth + 1); });
      compare(rn.right, qn.right, s3, depth + 1);
      f0.get();
      f1.get();
      f2.get();
      stats += s0;
      stats += s1;
      stats += s2;
      stats += s3;
      return;
    }

    compare(rn.left, qn.left, stats, depth + 1);
    compare(rn.left, qn.right, stats, depth + 1);
    compare(rn.right, qn.left, stats, depth + 1);
    compare(rn.right, qn.right, stats, depth + 1);
  }
};

int fork_levels_for(const TraversalOptions& opts) {
  if (opts.threads <= 1 || opts.write_counts || opts.pruned_pairs) return 0;
  int levels = 0;
  long tasks = 1;
  while (tasks * 4 <= opts.threads) {
    tasks *= 4;
    ++levels;
  }
  return levels;
}

}  // namespace

void dual_tree_compare_nodes(const BallTree& row_tree, const BallTree& col_tree,
                             const PruneRuleConfig& cfg, DenseMatrix& cosines,
                             TraversalStats& stats, const TraversalOptions& opts) {
  validate_epsilon(cfg.epsilon);
  if (cosines.rows() != row_tree.points().size() || cosines.cols() != col_tree.points().size())
    throw ShapeError("dual_tree_compare_nodes: cosine matrix shape mismatch");

  Traversal t{row_tree, col_tree, cfg, cosines, opts, fork_levels_for(opts)};
  t.compare(0, 0, stats, 0);
}

}  // namespace dtmm
