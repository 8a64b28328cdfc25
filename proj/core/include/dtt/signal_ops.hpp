#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dtt/family.hpp"
#include "dtt/matrix.hpp"
#include "dtt/transform_matrix.hpp"

namespace dtt {

struct CoefficientVector {
  std::vector<double> values;
  /// Unset when the coefficients came from a bare matrix.
  std::optional<TransformFamily> family;
  std::size_t n_param = 0;
};

/// Gram deviation above which inverse() refuses to run.
inline constexpr double kInverseGateTolerance = 1e-8;

/// m * x, one compensated dot product per output entry.
std::vector<double> forward(const Matrix& m, std::span<const double> x);
CoefficientVector forward(const TransformMatrix& m, std::span<const double> x);

/// m^T * c. The first call on a matrix (or any copy of it) measures its Gram
/// deviation and caches it; NotOrthogonal is thrown while that deviation
/// exceeds kInverseGateTolerance.
std::vector<double> inverse(const Matrix& m, std::span<const double> coefficients);
std::vector<double> inverse(const TransformMatrix& m, const CoefficientVector& coefficients);

/// max |x - m^T (m x)| without the orthogonality gate.
double roundtrip_error(const Matrix& m, std::span<const double> x);

/// m * image * m^T for a square image given row-major; size = m.cols().
Matrix forward_2d(const Matrix& m, const Matrix& image);

/// Deterministic test signal in [-1, 1]: std::minstd_rand seeded with
/// `seed`, each draw x in [1, 2^31 - 2] mapped to 2 (x - 1) / (2^31 - 3) - 1.
std::vector<double> lcg_signal(std::size_t length, std::uint32_t seed);

/// Seed used for the fixed pseudo-random test signals.
inline constexpr std::uint32_t kDefaultSignalSeed = 20240917;

}  // namespace dtt
