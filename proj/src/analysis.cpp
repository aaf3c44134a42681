#include "dtmm/analysis.hpp"

#include <cmath>
#include <stdexcept>

#include "dtmm/traversal.hpp"

namespace dtmm {

// Working in log space keeps the gamma ratios alive far past D ~ 300, where
// the direct form over/underflows.

double ball_volume(std::size_t dim, double radius) {
  if (dim < 1) throw std::invalid_argument("ball_volume: dim must be >= 1");
  if (radius < 0.0) throw std::invalid_argument("ball_volume: negative radius");
  if (radius == 0.0) return 0.0;
  const double d = static_cast<double>(dim);
  const double log_v = 0.5 * d * std::log(M_PI) + d * std::log(radius) -
                       std::lgamma(0.5 * (d + 2.0));
  return std::exp(log_v);
}

double ball_surface_area(std::size_t dim, double radius) {
  if (dim < 1) throw std::invalid_argument("ball_surface_area: dim must be >= 1");
  if (!(radius > 0.0)) throw std::invalid_argument("ball_surface_area: radius must be > 0");
  const double d = static_cast<double>(dim);
  const double log_sa = std::log(2.0) + 0.5 * d * std::log(M_PI) +
                        (d - 1.0) * std::log(radius) - std::lgamma(0.5 * d);
  return std::exp(log_sa);
}

OccupancyPrediction expected_occupancy(std::size_t m, std::size_t n, std::size_t dim,
                                       double epsilon) {
  if (dim < 2) throw std::invalid_argument("expected_occupancy: dim must be >= 2");
  validate_epsilon(epsilon);

  OccupancyPrediction p;
  p.m = m;
  p.n = n;
  p.dim = dim;
  p.epsilon = epsilon;
  p.cap_angular_radius = std::asin(epsilon / std::sqrt(2.0));

  // M*N * V_{D-1}(cap radius) / SA_D(1), expanded through log-gamma.
  const double d = static_cast<double>(dim);
  const double log_w = std::log(static_cast<double>(m)) + std::log(static_cast<double>(n)) +
                       std::lgamma(0.5 * d) - std::log(2.0) - 0.5 * std::log(M_PI) -
                       std::lgamma(0.5 * (d + 1.0)) +
                       (d - 1.0) * std::log(p.cap_angular_radius);
  p.expected_w = std::exp(log_w);
  return p;
}

RegimeExponents clustered_regime_exponents(double tau) {
  if (!(tau > 0.0)) throw std::invalid_argument("clustered_regime_exponents: tau must be > 0");
  RegimeExponents e;
  e.traversal_exponent = 3.0 - 2.0 * tau;
  return e;
}

}  // namespace dtmm
