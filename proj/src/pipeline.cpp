#include "dtmm/pipeline.hpp"

#include <chrono>
#include <cmath>
#include <future>
#include <stdexcept>

#include "dtmm/ball_tree.hpp"

namespace dtmm {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

MultiplyResult dual_tree_matmul(const DenseMatrix& a, const DenseMatrix& b,
                                const MultiplyConfig& cfg) {
  if (a.cols() != b.rows())
    throw ShapeError("dual_tree_matmul: inner dimensions " + std::to_string(a.cols()) +
                     " and " + std::to_string(b.rows()) + " differ");
  validate_epsilon(cfg.epsilon);
  if (cfg.leaf_size < 1) throw std::invalid_argument("dual_tree_matmul: leaf_size must be >= 1");

  MultiplyResult result;

  const auto build_start = Clock::now();
  const std::vector<double> mags_a = row_magnitudes(a);
  const std::vector<double> mags_b = col_magnitudes(b);
  const UnitPointSet row_points = normalize_rows(a);
  const UnitPointSet col_points = normalize_cols(b);

  // All-zero sides short-circuit: the magnitude prefill is already the answer.
  if (row_points.size() == 0 || col_points.size() == 0) {
    result.c_hat = magnitude_outer_product(mags_a, mags_b);
    result.build_seconds = seconds_since(build_start);
    return result;
  }

  BallTree row_tree, col_tree;
  if (cfg.threads > 1) {
    auto row_future = std::async(std::launch::async,
                                 [&] { return BallTree::build(row_points, cfg.leaf_size); });
    col_tree = BallTree::build(col_points, cfg.leaf_size);
    row_tree = row_future.get();
  } else {
    row_tree = BallTree::build(row_points, cfg.leaf_size);
    col_tree = BallTree::build(col_points, cfg.leaf_size);
  }
  result.build_seconds = seconds_since(build_start);

  const auto traversal_start = Clock::now();
  DenseMatrix cosines(row_points.size(), col_points.size());
  PruneRuleConfig rule{cfg.epsilon, cfg.rule};
  TraversalOptions opts;
  opts.threads = cfg.threads;
  dual_tree_compare_nodes(row_tree, col_tree, rule, cosines, result.stats, opts);

  // c_hat starts as the magnitude products and picks up the cosines on the
  // retained rectangle; dropped rows/columns stay exactly zero.
  result.c_hat = magnitude_outer_product(mags_a, mags_b);
  const std::vector<std::size_t> row_ids = row_points.retained_indices();
  const std::vector<std::size_t> col_ids = col_points.retained_indices();
  for (std::size_t i = 0; i < row_ids.size(); ++i)
    for (std::size_t j = 0; j < col_ids.size(); ++j)
      result.c_hat(row_ids[i], col_ids[j]) *= cosines(i, j);
  result.traversal_seconds = seconds_since(traversal_start);
  return result;
}

ErrorReport verify_error_bound(const DenseMatrix& c, const DenseMatrix& c_hat,
                               const std::vector<double>& mags_a,
                               const std::vector<double>& mags_b, double epsilon) {
  if (c.rows() != c_hat.rows() || c.cols() != c_hat.cols())
    throw ShapeError("verify_error_bound: matrix shapes differ");
  if (mags_a.size() != c.rows() || mags_b.size() != c.cols())
    throw ShapeError("verify_error_bound: magnitude lengths do not match the product shape");

  // Comparison slack on the dimensionless relative error.
  constexpr double kSlack = 1e-9;

  ErrorReport report;
  report.entries_checked = c.rows() * c.cols();
  for (std::size_t i = 0; i < c.rows(); ++i) {
    for (std::size_t j = 0; j < c.cols(); ++j) {
      const double denom = mags_a[i] * mags_b[j];
      if (denom == 0.0) {
        // Both factors of a zero-magnitude pair must be exact zeros.
        if (c(i, j) != 0.0 || c_hat(i, j) != 0.0) ++report.violations;
        continue;
      }
      const double rel = std::abs(c(i, j) - c_hat(i, j)) / denom;
      report.max_abs_error_over_magnitude = std::max(report.max_abs_error_over_magnitude, rel);
      if (rel > epsilon + kSlack) ++report.violations;
    }
  }
  return report;
}

ComplexityEstimate predicted_complexity(std::size_t m, std::size_t n, std::size_t d,
                                        double cluster_occupancy) {
  if (m < 1 || n < 1 || d < 1 || !(cluster_occupancy > 0.0))
    throw std::invalid_argument("predicted_complexity: all arguments must be positive");
  const double md = static_cast<double>(m) * static_cast<double>(d);
  const double nd = static_cast<double>(n) * static_cast<double>(d);
  ComplexityEstimate e;
  e.row_tree_term = md * std::log(md);
  e.col_tree_term = nd * std::log(nd);
  e.traversal_term = static_cast<double>(m) * static_cast<double>(n) *
                     (1.0 + static_cast<double>(d) / (cluster_occupancy * cluster_occupancy));
  e.total = e.row_tree_term + e.col_tree_term + e.traversal_term;
  return e;
}

}  // namespace dtmm
