#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dtmm {

/// Thrown when matrix shapes are incompatible with an operation.
struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Thrown on malformed or non-finite input data (files, user-supplied buffers).
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Dense real matrix, row-major.  Column access goes through col_gather();
/// there is deliberately only one matrix type.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_)
      throw ShapeError("DenseMatrix: data length " + std::to_string(data_.size()) +
                       " does not match " + std::to_string(rows_) + "x" + std::to_string(cols_));
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<double> row(std::size_t i) {
    return {data_.data() + i * cols_, cols_};
  }

  /// Copies column j into a contiguous buffer.
  std::vector<double> col_gather(std::size_t j) const;

  const std::vector<double>& data() const { return data_; }
  std::vector<double>& data() { return data_; }

  bool all_finite() const;

  bool operator==(const DenseMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// A set of unit vectors plus the magnitudes of the vectors they came from.
/// Zero vectors cannot be normalized; they are dropped from `points` and
/// recorded in `dropped_indices` (magnitudes[i] == 0 exactly for those i).
struct UnitPointSet {
  std::size_t dim = 0;
  DenseMatrix points;                         // one retained unit vector per row
  std::vector<double> magnitudes;             // per original vector
  std::vector<std::size_t> dropped_indices;   // original indices of zero vectors

  std::size_t size() const { return points.rows(); }
  std::span<const double> point(std::size_t i) const { return points.row(i); }

  /// Original indices of the retained points, in retained order.
  std::vector<std::size_t> retained_indices() const;
};

double dot(std::span<const double> a, std::span<const double> b);
double norm(std::span<const double> a);

/// Euclidean norm of each row of a.
std::vector<double> row_magnitudes(const DenseMatrix& a);

/// Euclidean norm of each column of b.
std::vector<double> col_magnitudes(const DenseMatrix& b);

/// result(i, j) = mags_a[i] * mags_b[j].  Entries must be nonnegative.
DenseMatrix magnitude_outer_product(const std::vector<double>& mags_a,
                                    const std::vector<double>& mags_b);

/// Rows of a scaled to unit length; zero rows are dropped, never divided.
UnitPointSet normalize_rows(const DenseMatrix& a);

/// Columns of b scaled to unit length; zero columns are dropped.
UnitPointSet normalize_cols(const DenseMatrix& b);

/// Exact triple-loop product, the ground-truth oracle.
DenseMatrix naive_multiply(const DenseMatrix& a, const DenseMatrix& b);

DenseMatrix transpose(const DenseMatrix& a);

}  // namespace dtmm
