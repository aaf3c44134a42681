#include "dtmm/datagen.hpp"

#include <cmath>
#include <stdexcept>

#include "dtmm/rng.hpp"

namespace dtmm {

namespace {

void gaussian_fill(Rng& rng, std::span<double> out) {
  for (double& v : out) v = rng.gaussian();
}

/// Normalizes in place; redraws on the (absurdly unlikely) zero vector.
void draw_unit(Rng& rng, std::span<double> out) {
  for (;;) {
    gaussian_fill(rng, out);
    const double n = norm(out);
    if (n > 0.0) {
      for (double& v : out) v /= n;
      return;
    }
  }
}

}  // namespace

UnitPointSet uniform_sphere(std::size_t n, std::size_t dim, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("uniform_sphere: n must be >= 1");
  if (dim < 2) throw std::invalid_argument("uniform_sphere: dim must be >= 2");

  Rng rng(seed);
  UnitPointSet out;
  out.dim = dim;
  out.points = DenseMatrix(n, dim);
  out.magnitudes.assign(n, 1.0);
  for (std::size_t i = 0; i < n; ++i) draw_unit(rng, out.points.row(i));
  return out;
}

ClusteredPoints clustered_sphere(const ClusterSpec& spec) {
  if (spec.num_clusters < 1 || spec.points_per_cluster < 1)
    throw std::invalid_argument("clustered_sphere: counts must be positive");
  if (spec.dim < 2) throw std::invalid_argument("clustered_sphere: dim must be >= 2");
  if (!(spec.angular_radius > 0.0) || !(spec.angular_radius < M_PI / 2.0))
    throw std::invalid_argument("clustered_sphere: angular_radius must lie in (0, pi/2)");

  Rng rng(spec.seed);
  const std::size_t total = spec.num_clusters * spec.points_per_cluster;

  ClusteredPoints out;
  out.points.dim = spec.dim;
  out.points.points = DenseMatrix(total, spec.dim);
  out.points.magnitudes.assign(total, 1.0);
  out.labels.resize(total);

  std::vector<double> center(spec.dim);
  std::vector<double> tangent(spec.dim);
  // Tangent deviations sized so typical points sit inside half the radius;
  // overshoots beyond the cap are redrawn.
  const double sigma = std::tan(spec.angular_radius / 2.0) / std::sqrt(static_cast<double>(spec.dim));

  std::size_t row = 0;
  for (std::size_t c = 0; c < spec.num_clusters; ++c) {
    draw_unit(rng, center);
    for (std::size_t p = 0; p < spec.points_per_cluster; ++p, ++row) {
      auto dst = out.points.points.row(row);
      for (;;) {
        gaussian_fill(rng, tangent);
        const double radial = dot(tangent, std::span<const double>(center));
        double tangent_sq = 0.0;
        for (std::size_t k = 0; k < spec.dim; ++k) {
          tangent[k] = sigma * (tangent[k] - radial * center[k]);
          tangent_sq += tangent[k] * tangent[k];
        }
        if (std::atan(std::sqrt(tangent_sq)) > spec.angular_radius) continue;
        double nrm = 0.0;
        for (std::size_t k = 0; k < spec.dim; ++k) {
          dst[k] = center[k] + tangent[k];
          nrm += dst[k] * dst[k];
        }
        nrm = std::sqrt(nrm);
        for (std::size_t k = 0; k < spec.dim; ++k) dst[k] /= nrm;
        break;
      }
      out.labels[row] = c;
    }
  }
  return out;
}

DenseMatrix matrix_from_unit_points(const UnitPointSet& points,
                                    const std::vector<double>& magnitudes, Orientation o) {
  if (magnitudes.size() != points.size())
    throw ShapeError("matrix_from_unit_points: magnitude count mismatch");
  for (double m : magnitudes)
    if (!(m > 0.0)) throw DataError("matrix_from_unit_points: magnitudes must be positive");

  const std::size_t n = points.size(), dim = points.dim;
  if (o == Orientation::Rows) {
    DenseMatrix out(n, dim);
    for (std::size_t i = 0; i < n; ++i) {
      auto src = points.point(i);
      auto dst = out.row(i);
      for (std::size_t k = 0; k < dim; ++k) dst[k] = magnitudes[i] * src[k];
    }
    return out;
  }
  DenseMatrix out(dim, n);
  for (std::size_t i = 0; i < n; ++i) {
    auto src = points.point(i);
    for (std::size_t k = 0; k < dim; ++k) out(k, i) = magnitudes[i] * src[k];
  }
  return out;
}

std::vector<double> sample_magnitudes(std::size_t n, const std::string& spec,
                                      std::uint64_t seed) {
  if (spec == "ones") return std::vector<double>(n, 1.0);

  auto split = [&](const std::string& prefix, double& a, double& b) {
    if (spec.rfind(prefix, 0) != 0) return false;
    const auto rest = spec.substr(prefix.size());
    const auto colon = rest.find(':');
    if (colon == std::string::npos) throw DataError("bad magnitude spec: " + spec);
    a = std::stod(rest.substr(0, colon));
    b = std::stod(rest.substr(colon + 1));
    return true;
  };

  Rng rng(seed);
  std::vector<double> out(n);
  double a = 0.0, b = 0.0;
  if (split("uniform:", a, b)) {
    if (!(a > 0.0) || !(b >= a)) throw DataError("uniform magnitudes need 0 < lo <= hi");
    for (double& v : out) v = rng.uniform(a, b);
  } else if (split("lognormal:", a, b)) {
    if (!(b >= 0.0)) throw DataError("lognormal magnitudes need sigma >= 0");
    for (double& v : out) v = std::exp(a + b * rng.gaussian());
  } else {
    throw DataError("unknown magnitude spec: " + spec);
  }
  return out;
}

}  // namespace dtmm
