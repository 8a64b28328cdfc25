#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

namespace dtt {

/// Dense, immutable, row-major real matrix.
///
/// Copies share the lazily computed orthogonality measure, which is safe
/// because the entries never change after construction.
class Matrix {
 public:
  Matrix() = default;
  /// Throws ShapeMismatch if entries.size() != rows * cols, InvalidArgument
  /// on a zero dimension or a non-finite entry.
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

  static Matrix identity(std::size_t n, double scale = 1.0);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  double operator()(std::size_t row, std::size_t col) const noexcept {
    return entries_[row * cols_ + col];
  }
  std::span<const double> row(std::size_t r) const noexcept {
    return {entries_.data() + r * cols_, cols_};
  }
  std::span<const double> entries() const noexcept { return entries_; }

  Matrix transposed() const;

  /// Returns compute(*this) the first time and the memoized value afterwards.
  template <typename Compute>
  double memoized_deviation(Compute&& compute) const {
    std::call_once(memo_->once, [&] { memo_->value = compute(*this); });
    return memo_->value;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) noexcept {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  struct Memo {
    std::once_flag once;
    double value = 0.0;
  };

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> entries_;
  std::shared_ptr<Memo> memo_ = std::make_shared<Memo>();
};

}  // namespace dtt
