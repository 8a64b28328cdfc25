#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dtt/family.hpp"
#include "dtt/matrix.hpp"
#include "dtt/transform_matrix.hpp"

namespace dtt {

/// Deviation of the Gram matrix from the identity.
struct GramReport {
  std::size_t n = 0;
  double max_offdiag = 0.0;
  double max_diag_dev = 0.0;
  double frobenius_dev = 0.0;

  double max_deviation() const noexcept { return max_offdiag > max_diag_dev ? max_offdiag : max_diag_dev; }
  bool orthogonal_at(double tolerance) const noexcept {
    return max_offdiag <= tolerance && max_diag_dev <= tolerance;
  }
};

/// G^T G from the row-pair inner products of G^T, each accumulated with
/// compensated_dot. Throws ShapeMismatch for a non-square matrix.
GramReport gram_report(const Matrix& m);

/// Default orthogonality tolerance: 1e-10 up to N = 64, 1e-13 * N beyond.
double default_tolerance(std::size_t n) noexcept;

struct ConditionCheck {
  std::string name;
  bool holds = false;
};

struct ConditionReport {
  bool satisfied = true;
  std::vector<ConditionCheck> checks;

  std::optional<std::string> first_failure() const;
};

/// gcd conditions behind the orthogonality theorems: gcd(pq,N)=1 and
/// gcd(pr,2)=1 for the generalized DCTs, gcd(pq,N)=1 alone for the
/// generalized DWTs. Throws NotParameterized for families without (p, q, r).
ConditionReport check_conditions(TransformFamily family, std::size_t n, const ParamsPQR& params);

/// Condition report for a family used without (p, q, r): classic and new
/// transforms are unconditionally orthogonal (satisfied, no checks);
/// dwt-unified has no gcd characterisation and yields nullopt. Throws
/// NotParameterized for the (p, q, r) families.
std::optional<ConditionReport> check_conditions(TransformFamily family, std::size_t n);

struct SweepRow {
  TransformFamily family{};
  std::size_t n = 0;
  ParamsPQR params;
  bool condition_satisfied = false;
  double gram_max_dev = 0.0;
  /// Set when the builder rejected the tuple (e.g. numerator overflow).
  std::optional<std::string> error;
};

struct SweepReport {
  double tolerance = 1e-10;
  std::vector<SweepRow> rows;

  /// Condition-satisfied rows whose deviation exceeds the tolerance, plus
  /// condition-satisfied rows that failed to build.
  std::vector<const SweepRow*> violations() const;
};

struct SweepOptions {
  std::size_t threads = 0;  // 0 picks std::thread::hardware_concurrency()
  /// dwt-unified only: use the kernel cas((2k+1)(qn+1) pi / 2N) as printed
  /// for the (1/2, 1/q, 2q) special case instead of the unified form.
  bool printed_special_case = false;
};

/// Builds and measures every (n, p, q, r) tuple with p <= p_max, q <= q_max,
/// r <= r_max for a (p, q, r) family. For kDwtUnified the sweep covers the
/// (1/2, 1/q, 2q) special case, recorded as (p, q, r) = (1, q, 1), with
/// p_max and r_max ignored. Rows are sorted by (n, p, q, r) whatever the
/// thread count.
SweepReport sweep(TransformFamily family, const std::vector<std::size_t>& n_values, std::int64_t p_max,
                  std::int64_t q_max, std::int64_t r_max, double tolerance,
                  const SweepOptions& options = {});

/// The dense matrix behind SweepOptions::printed_special_case.
Matrix printed_special_case_matrix(std::size_t n, std::int64_t q);

}  // namespace dtt
