#pragma once

#include <cstdint>
#include <vector>

#include "dtmm/matrix.hpp"

namespace dtmm {

/// n unit vectors uniform on the sphere in R^dim (normalized independent
/// gaussians); bit-identical for identical seeds.
UnitPointSet uniform_sphere(std::size_t n, std::size_t dim, std::uint64_t seed);

/// Caps of points around uniformly drawn centers.  points_per_cluster around
/// ceil(D^tau) reproduces the clustered regime the traversal thrives on.
struct ClusterSpec {
  std::size_t num_clusters = 1;
  std::size_t points_per_cluster = 1;
  std::size_t dim = 2;
  double angular_radius = 0.1;   // must lie in (0, pi/2)
  std::uint64_t seed = 0;
};

struct ClusteredPoints {
  UnitPointSet points;
  std::vector<std::size_t> labels;  // cluster id per point
};

/// Cluster members are tangent-space gaussian perturbations of the center,
/// renormalized, redrawn while they overshoot angular_radius.
ClusteredPoints clustered_sphere(const ClusterSpec& spec);

enum class Orientation { Rows, Cols };

/// Scales each unit point by its magnitude and lays the results out as matrix
/// rows or columns; inverse of normalize_rows / normalize_cols.
DenseMatrix matrix_from_unit_points(const UnitPointSet& points,
                                    const std::vector<double>& magnitudes, Orientation o);

/// Positive magnitudes for matrix assembly: "ones", "uniform:lo:hi" or
/// "lognormal:mu:sigma".
std::vector<double> sample_magnitudes(std::size_t n, const std::string& spec,
                                      std::uint64_t seed);

}  // namespace dtmm
