#pragma once

#include <cstdint>

namespace dtt {

/// Hartley kernel: cos(x) + sin(x).
double cas(double x) noexcept;

/// Largest integer a double represents exactly.
inline constexpr std::int64_t kMaxExactNumerator = std::int64_t{1} << 53;

/// Product of non-negative or signed integer factors, rejecting results whose
/// magnitude exceeds 2^53. Throws ParameterOverflow.
std::int64_t exact_product(std::int64_t a, std::int64_t b);

/// The angle numerator * pi / denominator, with the numerator reduced
/// modulo 2 * denominator in integer arithmetic first. denominator > 0.
double pi_fraction(std::int64_t numerator, std::int64_t denominator) noexcept;

}  // namespace dtt
