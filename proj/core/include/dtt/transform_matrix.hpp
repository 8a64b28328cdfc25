#pragma once

#include <cstddef>
#include <utility>

#include "dtt/family.hpp"
#include "dtt/matrix.hpp"

namespace dtt {

/// A materialized transform: the dense matrix plus the family, parameters
/// and size N it was built from. rows() may differ from N (N+1 for DCT-I,
/// 2N+1 for the sine-cosine transform).
class TransformMatrix {
 public:
  TransformMatrix(Matrix values, TransformFamily family, TransformParams params, std::size_t n)
      : values_(std::move(values)), family_(family), params_(std::move(params)), n_param_(n) {}

  const Matrix& matrix() const noexcept { return values_; }
  operator const Matrix&() const noexcept { return values_; }

  std::size_t rows() const noexcept { return values_.rows(); }
  std::size_t cols() const noexcept { return values_.cols(); }
  double operator()(std::size_t row, std::size_t col) const noexcept { return values_(row, col); }

  TransformFamily family() const noexcept { return family_; }
  const TransformParams& params() const noexcept { return params_; }
  std::size_t n_param() const noexcept { return n_param_; }

 private:
  Matrix values_;
  TransformFamily family_;
  TransformParams params_;
  std::size_t n_param_;
};

}  // namespace dtt
