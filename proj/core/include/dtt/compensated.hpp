#pragma once

#include <cmath>
#include <span>

namespace dtt {

/// Neumaier's variant of Kahan summation: the running compensation also
/// captures the error when the addend is larger than the partial sum.
class CompensatedSum {
 public:
  void add(double value) noexcept {
    const double t = sum_ + value;
    if (std::abs(sum_) >= std::abs(value)) {
      compensation_ += (sum_ - t) + value;
    } else {
      compensation_ += (value - t) + sum_;
    }
    sum_ = t;
  }

  CompensatedSum& operator+=(double value) noexcept {
    add(value);
    return *this;
  }

  double value() const noexcept { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

/// Inner product with error-free product transformation (fma) and
/// compensated accumulation of both the products and their rounding errors.
/// Result is as accurate as if computed in twice the working precision.
inline double compensated_dot(std::span<const double> a, std::span<const double> b) noexcept {
  double sum = 0.0;
  double err = 0.0;
  const std::size_t n = a.size() < b.size() ? a.size() : b.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double prod = a[i] * b[i];
    const double prod_err = std::fma(a[i], b[i], -prod);
    const double t = sum + prod;
    const double z = t - sum;
    err += ((sum - (t - z)) + (prod - z)) + prod_err;
    sum = t;
  }
  return sum + err;
}

}  // namespace dtt
