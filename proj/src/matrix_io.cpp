#include "dtmm/matrix_io.hpp"

#include <bit>
#include <charconv>
#include <cinttypes>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace dtmm {

static_assert(std::endian::native == std::endian::little,
              "binary matrix format assumes a little-endian host");

namespace {

void check_finite(const DenseMatrix& m, const std::string& path) {
  if (!m.all_finite()) throw DataError(path + ": non-finite matrix entry");
}

}  // namespace

DenseMatrix read_matrix_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path);

  std::vector<double> data;
  std::size_t rows = 0, cols = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::size_t row_cols = 0;
    const char* p = line.data();
    const char* end = line.data() + line.size();
    while (p < end) {
      double value = 0.0;
      auto [next, ec] = std::from_chars(p, end, value);
      if (ec != std::errc())
        throw DataError(path + ": bad number in row " + std::to_string(rows + 1));
      data.push_back(value);
      ++row_cols;
      p = next;
      if (p < end) {
        if (*p != ',') throw DataError(path + ": expected ',' in row " + std::to_string(rows + 1));
        ++p;
      }
    }
    if (rows == 0)
      cols = row_cols;
    else if (row_cols != cols)
      throw DataError(path + ": row " + std::to_string(rows + 1) + " has " +
                      std::to_string(row_cols) + " values, expected " + std::to_string(cols));
    ++rows;
  }
  if (rows == 0) throw DataError(path + ": empty matrix file");

  DenseMatrix m(rows, cols, std::move(data));
  check_finite(m, path);
  return m;
}

void write_matrix_csv(const std::string& path, const DenseMatrix& m) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write " + path);
  char buf[32];
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", m(i, j));
      if (j) out << ',';
      out << buf;
    }
    out << '\n';
  }
  if (!out) throw DataError("write failed: " + path);
}

DenseMatrix read_matrix_binary(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path);

  std::uint64_t rows = 0, cols = 0;
  in.read(reinterpret_cast<char*>(&rows), sizeof rows);
  in.read(reinterpret_cast<char*>(&cols), sizeof cols);
  if (!in) throw DataError(path + ": truncated header");
  if (rows == 0 || cols == 0) throw DataError(path + ": empty matrix");
  if (rows > (1u << 30) || cols > (1u << 30) || rows * cols > (1u << 30))
    throw DataError(path + ": implausible matrix shape");

  DenseMatrix m(rows, cols);
  in.read(reinterpret_cast<char*>(m.data().data()),
          static_cast<std::streamsize>(sizeof(double) * rows * cols));
  if (!in) throw DataError(path + ": truncated payload");
  check_finite(m, path);
  return m;
}

void write_matrix_binary(const std::string& path, const DenseMatrix& m) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path);
  const std::uint64_t rows = m.rows(), cols = m.cols();
  out.write(reinterpret_cast<const char*>(&rows), sizeof rows);
  out.write(reinterpret_cast<const char*>(&cols), sizeof cols);
  out.write(reinterpret_cast<const char*>(m.data().data()),
            static_cast<std::streamsize>(sizeof(double) * m.size()));
  if (!out) throw DataError("write failed: " + path);
}

namespace {

bool has_bin_extension(const std::string& path) {
  return path.size() >= 4 && path.compare(path.size() - 4, 4, ".bin") == 0;
}

}  // namespace

DenseMatrix read_matrix(const std::string& path) {
  return has_bin_extension(path) ? read_matrix_binary(path) : read_matrix_csv(path);
}

void write_matrix(const std::string& path, const DenseMatrix& m) {
  if (has_bin_extension(path))
    write_matrix_binary(path, m);
  else
    write_matrix_csv(path, m);
}

}  // namespace dtmm
