#include "dtmm/matrix.hpp"

#include <cmath>

namespace dtmm {

std::vector<double> DenseMatrix::col_gather(std::size_t j) const {
  std::vector<double> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = data_[i * cols_ + j];
  return out;
}

bool DenseMatrix::all_finite() const {
  for (double v : data_)
    if (!std::isfinite(v)) return false;
  return true;
}

std::vector<std::size_t> UnitPointSet::retained_indices() const {
  std::vector<std::size_t> out;
  out.reserve(magnitudes.size() - dropped_indices.size());
  std::size_t next_dropped = 0;
  for (std::size_t i = 0; i < magnitudes.size(); ++i) {
    if (next_dropped < dropped_indices.size() && dropped_indices[next_dropped] == i) {
      ++next_dropped;
      continue;
    }
    out.push_back(i);
  }
  return out;
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

std::vector<double> row_magnitudes(const DenseMatrix& a) {
  std::vector<double> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) out[i] = norm(a.row(i));
  return out;
}

std::vector<double> col_magnitudes(const DenseMatrix& b) {
  std::vector<double> out(b.cols(), 0.0);
  for (std::size_t i = 0; i < b.rows(); ++i) {
    auto row = b.row(i);
    for (std::size_t j = 0; j < b.cols(); ++j) out[j] += row[j] * row[j];
  }
  for (double& v : out) v = std::sqrt(v);
  return out;
}

DenseMatrix magnitude_outer_product(const std::vector<double>& mags_a,
                                    const std::vector<double>& mags_b) {
  for (double v : mags_a)
    if (v < 0.0) throw DataError("magnitude_outer_product: negative magnitude");
  for (double v : mags_b)
    if (v < 0.0) throw DataError("magnitude_outer_product: negative magnitude");
  DenseMatrix out(mags_a.size(), mags_b.size());
  for (std::size_t i = 0; i < mags_a.size(); ++i)
    for (std::size_t j = 0; j < mags_b.size(); ++j) out(i, j) = mags_a[i] * mags_b[j];
  return out;
}

UnitPointSet normalize_rows(const DenseMatrix& a) {
  UnitPointSet out;
  out.dim = a.cols();
  out.magnitudes = row_magnitudes(a);

  std::size_t retained = 0;
  for (double m : out.magnitudes)
    if (m > 0.0) ++retained;

  out.points = DenseMatrix(retained, a.cols());
  std::size_t r = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (out.magnitudes[i] == 0.0) {
      out.dropped_indices.push_back(i);
      continue;
    }
    const double inv = 1.0 / out.magnitudes[i];
    auto src = a.row(i);
    auto dst = out.points.row(r++);
    for (std::size_t k = 0; k < a.cols(); ++k) dst[k] = src[k] * inv;
  }
  return out;
}

UnitPointSet normalize_cols(const DenseMatrix& b) {
  UnitPointSet out;
  out.dim = b.rows();
  out.magnitudes = col_magnitudes(b);

  std::size_t retained = 0;
  for (double m : out.magnitudes)
    if (m > 0.0) ++retained;

  out.points = DenseMatrix(retained, b.rows());
  std::size_t r = 0;
  for (std::size_t j = 0; j < b.cols(); ++j) {
    if (out.magnitudes[j] == 0.0) {
      out.dropped_indices.push_back(j);
      continue;
    }
    const double inv = 1.0 / out.magnitudes[j];
    auto dst = out.points.row(r++);
    for (std::size_t k = 0; k < b.rows(); ++k) dst[k] = b(k, j) * inv;
  }
  return out;
}

DenseMatrix naive_multiply(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows())
    throw ShapeError("naive_multiply: inner dimensions " + std::to_string(a.cols()) +
                     " and " + std::to_string(b.rows()) + " differ");
  DenseMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

DenseMatrix transpose(const DenseMatrix& a) {
  DenseMatrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

}  // namespace dtmm
