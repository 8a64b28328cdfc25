#include "dtt/validation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <thread>

#include "dtt/builders.hpp"
#include "dtt/compensated.hpp"
#include "dtt/errors.hpp"
#include "dtt/kernels.hpp"

namespace dtt {

GramReport gram_report(const Matrix& m) {
  if (!m.square()) throw ShapeMismatch("Gram report needs a square matrix; columns", m.rows(), m.cols());
  GramReport report;
  report.n = m.rows();
  // (G^T G)_ij is the inner product of rows i and j of G^T.
  const Matrix gt = m.transposed();
  CompensatedSum frobenius_sq;
  for (std::size_t i = 0; i < gt.rows(); ++i) {
    const auto row_i = gt.row(i);
    const double diag = std::abs(compensated_dot(row_i, row_i) - 1.0);
    report.max_diag_dev = std::max(report.max_diag_dev, diag);
    frobenius_sq += diag * diag;
    for (std::size_t j = i + 1; j < gt.rows(); ++j) {
      const double off = std::abs(compensated_dot(row_i, gt.row(j)));
      report.max_offdiag = std::max(report.max_offdiag, off);
      frobenius_sq += 2.0 * off * off;
    }
  }
  report.frobenius_dev = std::sqrt(frobenius_sq.value());
  return report;
}

double default_tolerance(std::size_t n) noexcept {
  return n <= 64 ? 1e-10 : 1e-13 * static_cast<double>(n);
}

std::optional<std::string> ConditionReport::first_failure() const {
  for (const auto& check : checks) {
    if (!check.holds) return check.name;
  }
  return std::nullopt;
}

ConditionReport check_conditions(TransformFamily family, std::size_t n, const ParamsPQR& params) {
  if (!takes_pqr(family)) {
    throw NotParameterized(std::string("family ") + std::string(family_name(family)) +
                           " takes no p, q, r");
  }
  if (n == 0) throw InvalidArgument("transform size N must be at least 1");
  params.validate();
  const auto big_n = static_cast<std::int64_t>(n);
  const std::int64_t pq = exact_product(params.p, params.q);
  ConditionReport report;
  report.checks.push_back({"gcd(pq,N)=1", std::gcd(pq, big_n) == 1});
  const bool dct = family == TransformFamily::kGenDct2 || family == TransformFamily::kGenDct3 ||
                   family == TransformFamily::kGenDct4;
  if (dct) {
    report.checks.push_back({"gcd(pr,2)=1", std::gcd(exact_product(params.p, params.r), std::int64_t{2}) == 1});
  }
  report.satisfied = std::all_of(report.checks.begin(), report.checks.end(),
                                 [](const ConditionCheck& c) { return c.holds; });
  return report;
}

std::optional<ConditionReport> check_conditions(TransformFamily family, std::size_t n) {
  if (takes_pqr(family)) {
    throw NotParameterized(std::string("family ") + std::string(family_name(family)) +
                           " requires p, q and r");
  }
  if (n == 0) throw InvalidArgument("transform size N must be at least 1");
  if (family == TransformFamily::kDwtUnified) return std::nullopt;
  return ConditionReport{};
}

std::vector<const SweepRow*> SweepReport::violations() const {
  std::vector<const SweepRow*> out;
  for (const auto& row : rows) {
    if (row.condition_satisfied && (row.error || !(row.gram_max_dev <= tolerance))) out.push_back(&row);
  }
  return out;
}

Matrix printed_special_case_matrix(std::size_t n, std::int64_t q) {
  if (n == 0) throw InvalidArgument("transform size N must be at least 1");
  if (q < 1) throw InvalidArgument("q must be a positive integer");
  const auto big_n = static_cast<std::int64_t>(n);
  const double scale = std::sqrt(1.0 / static_cast<double>(big_n));
  std::vector<double> entries;
  entries.reserve(n * n);
  for (std::int64_t k = 0; k < big_n; ++k) {
    for (std::int64_t c = 0; c < big_n; ++c) {
      const std::int64_t inner = exact_product(q, c) + 1;
      entries.push_back(scale * cas(pi_fraction(exact_product(2 * k + 1, inner), 2 * big_n)));
    }
  }
  return Matrix(n, n, std::move(entries));
}

namespace {

SweepRow measure(TransformFamily family, std::size_t n, const ParamsPQR& params, bool printed) {
  SweepRow row{family, n, params, false, 0.0, std::nullopt};
  try {
    if (family == TransformFamily::kDwtUnified) {
      row.condition_satisfied = check_conditions(TransformFamily::kGenDwtCas, n, params).satisfied;
      const DwtParams dwt{Rational(1, 2), Rational(1, params.q), 2 * params.q};
      const Matrix m = printed ? printed_special_case_matrix(n, params.q) : build_dwt_unified(n, dwt).matrix();
      row.gram_max_dev = gram_report(m).max_deviation();
    } else {
      row.condition_satisfied = check_conditions(family, n, params).satisfied;
      row.gram_max_dev = gram_report(build(family, n, params)).max_deviation();
    }
  } catch (const ParameterOverflow& e) {
    row.error = e.what();
  }
  return row;
}

}  // namespace

SweepReport sweep(TransformFamily family, const std::vector<std::size_t>& n_values, std::int64_t p_max,
                  std::int64_t q_max, std::int64_t r_max, double tolerance, const SweepOptions& options) {
  const bool unified = family == TransformFamily::kDwtUnified;
  if (!takes_pqr(family) && !unified) {
    throw NotParameterized(std::string("family ") + std::string(family_name(family)) +
                           " takes no p, q, r");
  }
  if (options.printed_special_case && !unified) {
    throw InvalidArgument("the printed special-case kernel applies to dwt-unified only");
  }
  if (unified) {
    p_max = 1;
    r_max = 1;
  }
  if (p_max < 1 || q_max < 1 || r_max < 1) throw InvalidArgument("sweep bounds must be at least 1");
  if (!(tolerance > 0.0)) throw InvalidArgument("sweep tolerance must be positive");
  if (n_values.empty()) throw InvalidArgument("sweep needs at least one N");

  std::vector<std::size_t> sizes = n_values;
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  if (sizes.front() == 0) throw InvalidArgument("transform size N must be at least 1");

  struct Task {
    std::size_t n;
    ParamsPQR params;
  };
  std::vector<Task> tasks;
  for (std::size_t n : sizes) {
    for (std::int64_t p = 1; p <= p_max; ++p) {
      for (std::int64_t q = 1; q <= q_max; ++q) {
        for (std::int64_t r = 1; r <= r_max; ++r) tasks.push_back({n, {p, q, r}});
      }
    }
  }

  SweepReport report;
  report.tolerance = tolerance;
  report.rows.resize(tasks.size());
  std::size_t workers = options.threads ? options.threads : std::thread::hardware_concurrency();
  workers = std::clamp<std::size_t>(workers, 1, tasks.size());
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
          report.rows[i] = measure(family, tasks[i].n, tasks[i].params, options.printed_special_case);
        }
      });
    }
  }
  return report;
}

}  // namespace dtt
