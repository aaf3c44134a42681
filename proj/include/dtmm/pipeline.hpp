#pragma once

#include "dtmm/matrix.hpp"
#include "dtmm/traversal.hpp"

namespace dtmm {

struct MultiplyConfig {
  double epsilon = 0.1;                    // in (0, sqrt(2))
  std::size_t leaf_size = 1;
  PruneRule rule = PruneRule::Adaptive;
  int threads = 1;
};

struct MultiplyResult {
  DenseMatrix c_hat;
  TraversalStats stats;
  double build_seconds = 0.0;       // normalization + both tree builds
  double traversal_seconds = 0.0;   // dual traversal + magnitude combine
};

/// End-to-end approximate product: magnitudes, normalization, two ball trees,
/// dual traversal, then cosines scaled by the magnitude outer product.  Every
/// entry of c_hat is within epsilon * |a_i| * |b_j| of the exact product; rows
/// or columns that are identically zero yield exact zeros.
MultiplyResult dual_tree_matmul(const DenseMatrix& a, const DenseMatrix& b,
                                const MultiplyConfig& cfg);

/// Per-entry check of the magnitude-relative error bound.
struct ErrorReport {
  double max_abs_error_over_magnitude = 0.0;  // zero-magnitude pairs excluded
  std::uint64_t violations = 0;               // entries exceeding epsilon
  std::uint64_t entries_checked = 0;
};

ErrorReport verify_error_bound(const DenseMatrix& c, const DenseMatrix& c_hat,
                               const std::vector<double>& mags_a,
                               const std::vector<double>& mags_b, double epsilon);

/// Operation-count model: tree terms M D log(M D) and N D log(N D) plus the
/// traversal term M N (1 + D / occupancy^2); natural logarithms.
struct ComplexityEstimate {
  double row_tree_term = 0.0;
  double col_tree_term = 0.0;
  double traversal_term = 0.0;
  double total = 0.0;
};

ComplexityEstimate predicted_complexity(std::size_t m, std::size_t n, std::size_t d,
                                        double cluster_occupancy);

}  // namespace dtmm
