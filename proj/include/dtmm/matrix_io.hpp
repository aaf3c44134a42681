#pragma once

#include <iosfwd>
#include <string>

#include "dtmm/matrix.hpp"

namespace dtmm {

// Two on-disk formats, both validated for finiteness on read:
//   CSV     one row per line, comma-separated decimal values
//   binary  [u64 rows][u64 cols][f64 * rows*cols], little-endian

DenseMatrix read_matrix_csv(const std::string& path);
void write_matrix_csv(const std::string& path, const DenseMatrix& m);

DenseMatrix read_matrix_binary(const std::string& path);
void write_matrix_binary(const std::string& path, const DenseMatrix& m);

/// Dispatches on extension: ".bin" is binary, everything else CSV.
DenseMatrix read_matrix(const std::string& path);
void write_matrix(const std::string& path, const DenseMatrix& m);

}  // namespace dtmm
