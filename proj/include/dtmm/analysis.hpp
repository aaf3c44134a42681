#pragma once

#include <cstddef>

namespace dtmm {

/// Volume of the D-ball of radius r, evaluated through log-gamma.
double ball_volume(std::size_t dim, double radius);

/// Surface area of the D-ball of radius r (the radial derivative of the
/// volume).
double ball_surface_area(std::size_t dim, double radius);

/// Expected number of points landing in one cap of angular radius
/// arcsin(eps/sqrt(2)) when M + N unit vectors are uniform on the sphere,
/// pooled as M*N per the closed form.  Decays exponentially in D.
struct OccupancyPrediction {
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t dim = 0;
  double epsilon = 0.0;
  double cap_angular_radius = 0.0;     // arcsin(eps / sqrt(2))
  double expected_w = 0.0;
};

OccupancyPrediction expected_occupancy(std::size_t m, std::size_t n, std::size_t dim,
                                       double epsilon);

/// Exponents of the two additive terms of the square-matrix clustered-regime
/// runtime: D^2 log D for tree construction and D^(3 - 2*tau) for traversal.
struct RegimeExponents {
  double tree_exponent = 2.0;
  bool tree_log_factor = true;
  double traversal_exponent = 0.0;
};

RegimeExponents clustered_regime_exponents(double tau);

}  // namespace dtmm
