#include "dtt/matrix.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "dtt/errors.hpp"

namespace dtt {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows == 0 || cols == 0) throw InvalidArgument("matrix dimensions must be positive");
  if (entries_.size() != rows * cols) {
    throw ShapeMismatch("matrix entry count", rows * cols, entries_.size());
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!std::isfinite(entries_[i])) {
      throw InvalidArgument("non-finite matrix entry at (" + std::to_string(i / cols) + ", " +
                            std::to_string(i % cols) + ")");
    }
  }
}

Matrix Matrix::identity(std::size_t n, double scale) {
  std::vector<double> entries(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) entries[i * n + i] = scale;
  return Matrix(n, n, std::move(entries));
}

Matrix Matrix::transposed() const {
  std::vector<double> out(entries_.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out[c * rows_ + r] = entries_[r * cols_ + c];
  }
  return Matrix(cols_, rows_, std::move(out));
}

namespace {

std::string describe_deviation(double deviation) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "matrix is not orthogonal (max Gram deviation %.6e)", deviation);
  return buf;
}

}  // namespace

NotOrthogonal::NotOrthogonal(double deviation)
    : std::runtime_error(describe_deviation(deviation)), deviation_(deviation) {}

}  // namespace dtt
