#include "dtt/signal_ops.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "dtt/compensated.hpp"
#include "dtt/errors.hpp"
#include "dtt/validation.hpp"

namespace dtt {

namespace {

void require_finite(std::span<const double> values, const char* what) {
  for (double v : values) {
    if (!std::isfinite(v)) throw InvalidArgument(std::string(what) + " contains a non-finite value");
  }
}

std::vector<double> transpose_apply(const Matrix& m, std::span<const double> c) {
  std::vector<double> column(m.rows());
  std::vector<double> out(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (std::size_t i = 0; i < m.rows(); ++i) column[i] = m(i, j);
    out[j] = compensated_dot(column, c);
  }
  return out;
}

}  // namespace

std::vector<double> forward(const Matrix& m, std::span<const double> x) {
  if (x.size() != m.cols()) throw ShapeMismatch("signal length", m.cols(), x.size());
  require_finite(x, "signal");
  std::vector<double> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) out[i] = compensated_dot(m.row(i), x);
  return out;
}

CoefficientVector forward(const TransformMatrix& m, std::span<const double> x) {
  return {forward(m.matrix(), x), m.family(), m.n_param()};
}

std::vector<double> inverse(const Matrix& m, std::span<const double> coefficients) {
  if (coefficients.size() != m.rows()) throw ShapeMismatch("coefficient length", m.rows(), coefficients.size());
  require_finite(coefficients, "coefficients");
  if (!m.square()) throw ShapeMismatch("inverse needs a square matrix; columns", m.rows(), m.cols());
  const double deviation = m.memoized_deviation([](const Matrix& self) { return gram_report(self).max_deviation(); });
  if (!(deviation <= kInverseGateTolerance)) throw NotOrthogonal(deviation);
  return transpose_apply(m, coefficients);
}

std::vector<double> inverse(const TransformMatrix& m, const CoefficientVector& coefficients) {
  return inverse(m.matrix(), coefficients.values);
}

double roundtrip_error(const Matrix& m, std::span<const double> x) {
  if (!m.square()) throw ShapeMismatch("round trip needs a square matrix; columns", m.rows(), m.cols());
  const std::vector<double> back = transpose_apply(m, forward(m, x));
  double worst = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) worst = std::max(worst, std::abs(x[i] - back[i]));
  return worst;
}

Matrix forward_2d(const Matrix& m, const Matrix& image) {
  if (!image.square()) throw ShapeMismatch("image columns", image.rows(), image.cols());
  if (image.rows() != m.cols()) throw ShapeMismatch("image size", m.cols(), image.rows());
  // Columns first: tmp = m * image, then out = tmp * m^T.
  const std::size_t rows = m.rows();
  const std::size_t size = image.rows();
  const Matrix image_t = image.transposed();
  std::vector<double> tmp(rows * size);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < size; ++j) tmp[i * size + j] = compensated_dot(m.row(i), image_t.row(j));
  }
  std::vector<double> out(rows * rows);
  for (std::size_t i = 0; i < rows; ++i) {
    const std::span<const double> tmp_row(tmp.data() + i * size, size);
    for (std::size_t j = 0; j < rows; ++j) out[i * rows + j] = compensated_dot(tmp_row, m.row(j));
  }
  return Matrix(rows, rows, std::move(out));
}

std::vector<double> lcg_signal(std::size_t length, std::uint32_t seed) {
  std::minstd_rand engine(seed);
  constexpr double span = static_cast<double>(std::minstd_rand::max() - std::minstd_rand::min());
  std::vector<double> out(length);
  for (auto& v : out) v = 2.0 * static_cast<double>(engine() - std::minstd_rand::min()) / span - 1.0;
  return out;
}

}  // namespace dtt
