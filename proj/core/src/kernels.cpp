#include "dtt/kernels.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "dtt/errors.hpp"

namespace dtt {

double cas(double x) noexcept { return std::cos(x) + std::sin(x); }

std::int64_t exact_product(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out) || out > kMaxExactNumerator || out < -kMaxExactNumerator) {
    throw ParameterOverflow("kernel numerator " + std::to_string(a) + " * " + std::to_string(b) +
                            " exceeds 2^53");
  }
  return out;
}

double pi_fraction(std::int64_t numerator, std::int64_t denominator) noexcept {
  const std::int64_t period = 2 * denominator;
  std::int64_t reduced = numerator % period;
  if (reduced < 0) reduced += period;
  // Canonical lowest terms, so equal angles reached through different
  // parameterizations convert to the same double.
  const std::int64_t g = std::gcd(reduced, denominator);
  reduced /= g;
  denominator /= g;
  return static_cast<double>(reduced) * std::numbers::pi / static_cast<double>(denominator);
}

}  // namespace dtt
