#include "dtt/builders.hpp"

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "dtt/errors.hpp"
#include "dtt/kernels.hpp"

namespace dtt {

namespace {

using i64 = std::int64_t;

i64 checked_size(std::size_t n) {
  if (n == 0) throw InvalidArgument("transform size N must be at least 1");
  if (n > static_cast<std::size_t>(1) << 20) {
    throw InvalidArgument("transform size N=" + std::to_string(n) + " is too large to materialize");
  }
  return static_cast<i64>(n);
}

i64 add(i64 a, i64 b) {
  i64 out = 0;
  if (__builtin_add_overflow(a, b, &out) || out > kMaxExactNumerator || out < -kMaxExactNumerator) {
    throw ParameterOverflow("kernel numerator exceeds 2^53");
  }
  return out;
}

i64 mul(i64 a, i64 b) { return exact_product(a, b); }

// Exactly-rounded sqrt(base * wk2 * wn2); the squared weights are 1 or 1/2,
// so the product under the root is formed without extra rounding.
double weighted_scale(double base, double wk2, double wn2) { return std::sqrt(base * wk2 * wn2); }

template <typename Entry>
Matrix tabulate(std::size_t rows, std::size_t cols, Entry entry) {
  std::vector<double> out;
  out.reserve(rows * cols);
  for (std::size_t k = 0; k < rows; ++k) {
    for (std::size_t c = 0; c < cols; ++c) out.push_back(entry(static_cast<i64>(k), static_cast<i64>(c)));
  }
  return Matrix(rows, cols, std::move(out));
}

}  // namespace

DwtParams classic_dwt_params(Variant variant) {
  switch (variant) {
    case Variant::kI:
      return {Rational(0), Rational(0), 2};
    case Variant::kII:
      return {Rational(1, 2), Rational(0), 2};
    case Variant::kIII:
      return {Rational(0), Rational(1, 2), 2};
    case Variant::kIV:
      return {Rational(1, 2), Rational(1, 2), 2};
  }
  throw InvalidArgument("unknown DWT variant");
}

TransformMatrix build_classic_dct(Variant variant, std::size_t n) {
  const i64 big_n = checked_size(n);
  const double nd = static_cast<double>(big_n);
  switch (variant) {
    case Variant::kI: {
      auto w2 = [big_n](i64 i) { return (i == 0 || i == big_n) ? 0.5 : 1.0; };
      Matrix m = tabulate(n + 1, n + 1, [&](i64 k, i64 c) {
        return weighted_scale(2.0 / nd, w2(k), w2(c)) * std::cos(pi_fraction(mul(k, c), big_n));
      });
      return {std::move(m), TransformFamily::kDct1, std::monostate{}, n};
    }
    case Variant::kII: {
      Matrix m = tabulate(n, n, [&](i64 k, i64 c) {
        const double scale = std::sqrt((c == 0 ? 1.0 : 2.0) / nd);
        return scale * std::cos(pi_fraction(mul(2 * k + 1, c), 2 * big_n));
      });
      return {std::move(m), TransformFamily::kDct2, std::monostate{}, n};
    }
    case Variant::kIII: {
      Matrix m = tabulate(n, n, [&](i64 k, i64 c) {
        const double scale = std::sqrt((k == 0 ? 1.0 : 2.0) / nd);
        return scale * std::cos(pi_fraction(mul(k, 2 * c + 1), 2 * big_n));
      });
      return {std::move(m), TransformFamily::kDct3, std::monostate{}, n};
    }
    case Variant::kIV: {
      const double scale = std::sqrt(2.0 / nd);
      Matrix m = tabulate(n, n, [&](i64 k, i64 c) {
        return scale * std::cos(pi_fraction(mul(2 * k + 1, 2 * c + 1), 4 * big_n));
      });
      return {std::move(m), TransformFamily::kDct4, std::monostate{}, n};
    }
  }
  throw InvalidArgument("unknown DCT variant");
}

TransformMatrix build_gen_dct(Variant variant, std::size_t n, const ParamsPQR& params) {
  const i64 big_n = checked_size(n);
  params.validate();
  const double nd = static_cast<double>(big_n);
  const auto [p, q, r] = params;
  switch (variant) {
    case Variant::kIII:
    case Variant::kII: {
      Matrix m = tabulate(n, n, [&](i64 k, i64 c) {
        const double scale = weighted_scale(2.0 / nd, k == 0 ? 0.5 : 1.0, 1.0);
        const i64 inner = add(mul(mul(4, q), c), r);
        return scale * std::cos(pi_fraction(mul(mul(k, inner), p), 2 * big_n));
      });
      if (variant == Variant::kII) return {m.transposed(), TransformFamily::kGenDct2, params, n};
      return {std::move(m), TransformFamily::kGenDct3, params, n};
    }
    case Variant::kIV: {
      const double scale = std::sqrt(2.0 / nd);
      Matrix m = tabulate(n, n, [&](i64 k, i64 c) {
        const i64 inner = add(mul(mul(4, q), c), r);
        return scale * std::cos(pi_fraction(mul(mul(2 * k + 1, inner), p), 4 * big_n));
      });
      return {std::move(m), TransformFamily::kGenDct4, params, n};
    }
    case Variant::kI:
      break;
  }
  throw InvalidArgument("generalized DCT exists only for variants II, III and IV");
}

TransformMatrix build_new_dct(std::size_t n) {
  const i64 big_n = checked_size(n);
  const i64 period = 2 * big_n - 1;
  const double base = 4.0 / static_cast<double>(period);
  auto w2 = [big_n](i64 i) { return i == big_n - 1 ? 0.5 : 1.0; };
  Matrix m = tabulate(n, n, [&](i64 k, i64 c) {
    return weighted_scale(base, w2(k), w2(c)) * std::cos(pi_fraction(mul(2 * k + 1, 2 * c + 1), period));
  });
  return {std::move(m), TransformFamily::kNewDct, std::monostate{}, n};
}

TransformMatrix build_new_dst(std::size_t n) {
  const i64 big_n = checked_size(n);
  const i64 period = 2 * big_n + 1;
  const double scale = std::sqrt(4.0 / static_cast<double>(period));
  Matrix m = tabulate(n, n, [&](i64 k, i64 c) {
    return scale * std::sin(pi_fraction(mul(2 * k + 1, 2 * c + 1), period));
  });
  return {std::move(m), TransformFamily::kNewDst, std::monostate{}, n};
}

TransformMatrix build_new_sct(std::size_t n) {
  const i64 big_n = checked_size(n);
  const i64 period = 2 * big_n + 1;
  const double pd = static_cast<double>(period);
  const double trig_scale = std::sqrt(2.0 / pd);
  const double constant = -std::sqrt(1.0 / pd);
  const auto size = static_cast<std::size_t>(period);
  Matrix m = tabulate(size, size, [&](i64 row, i64 c) {
    if (row == big_n) return constant;
    const i64 k = row < big_n ? row : row - big_n - 1;
    const double angle = pi_fraction(mul(2 * k + 1, 2 * c + 1), period);
    return trig_scale * (row < big_n ? std::cos(angle) : std::sin(angle));
  });
  return {std::move(m), TransformFamily::kNewSct, std::monostate{}, n};
}

namespace {

Matrix dwt_unified_matrix(i64 big_n, const DwtParams& params) {
  params.validate();
  const i64 a_num = params.alpha.num(), a_den = params.alpha.den();
  const i64 b_num = params.beta.num(), b_den = params.beta.den();
  const i64 den = mul(mul(a_den, b_den), big_n);
  const double scale = std::sqrt(1.0 / static_cast<double>(big_n));
  const auto size = static_cast<std::size_t>(big_n);
  // (k + a)(n + b) gamma / N == (k a_den + a_num)(n b_den + b_num) gamma / (a_den b_den N)
  return tabulate(size, size, [&](i64 k, i64 c) {
    const i64 row_term = add(mul(k, a_den), a_num);
    const i64 col_term = add(mul(c, b_den), b_num);
    return scale * cas(pi_fraction(mul(mul(row_term, col_term), params.gamma), den));
  });
}

Variant dwt_variant_of(TransformFamily family) {
  switch (family) {
    case TransformFamily::kDwt1:
      return Variant::kI;
    case TransformFamily::kDwt2:
      return Variant::kII;
    case TransformFamily::kDwt3:
      return Variant::kIII;
    default:
      return Variant::kIV;
  }
}

}  // namespace

TransformMatrix build_dwt_unified(std::size_t n, const DwtParams& params) {
  const i64 big_n = checked_size(n);
  return {dwt_unified_matrix(big_n, params), TransformFamily::kDwtUnified, params, n};
}

TransformMatrix build_dwt_classic(Variant variant, std::size_t n) {
  const i64 big_n = checked_size(n);
  const DwtParams params = classic_dwt_params(variant);
  static constexpr TransformFamily kTags[] = {TransformFamily::kDwt1, TransformFamily::kDwt2,
                                              TransformFamily::kDwt3, TransformFamily::kDwt4};
  return {dwt_unified_matrix(big_n, params), kTags[static_cast<int>(variant)], params, n};
}

TransformMatrix build_dwt_cas(std::size_t n, const ParamsPQR& params) {
  const i64 big_n = checked_size(n);
  params.validate();
  const double scale = std::sqrt(1.0 / static_cast<double>(big_n));
  const auto [p, q, r] = params;
  Matrix m = tabulate(n, n, [&](i64 k, i64 c) {
    const i64 inner = add(mul(q, c), r);
    return scale * cas(pi_fraction(mul(mul(2 * k + 1, inner), p), big_n));
  });
  return {std::move(m), TransformFamily::kGenDwtCas, params, n};
}

TransformMatrix build_gen_dwt4(std::size_t n, const ParamsPQR& params) {
  const i64 big_n = checked_size(n);
  params.validate();
  const double scale = std::sqrt(1.0 / static_cast<double>(big_n));
  const auto [p, q, r] = params;
  Matrix m = tabulate(n, n, [&](i64 k, i64 c) {
    const i64 inner = add(mul(mul(2, q), c), r);
    return scale * cas(pi_fraction(mul(mul(2 * k + 1, inner), p), 2 * big_n));
  });
  return {std::move(m), TransformFamily::kGenDwt4, params, n};
}

TransformMatrix build(TransformFamily family, std::size_t n, const TransformParams& params) {
  const auto expect_none = [&] {
    if (!std::holds_alternative<std::monostate>(params)) {
      throw NotParameterized(std::string("family ") + std::string(family_name(family)) +
                             " takes no parameters");
    }
  };
  const auto pqr = [&]() -> const ParamsPQR& {
    if (const auto* found = std::get_if<ParamsPQR>(&params)) return *found;
    throw NotParameterized(std::string("family ") + std::string(family_name(family)) +
                           " requires p, q and r");
  };
  switch (family) {
    case TransformFamily::kDct1:
    case TransformFamily::kDct2:
    case TransformFamily::kDct3:
    case TransformFamily::kDct4:
      expect_none();
      return build_classic_dct(static_cast<Variant>(static_cast<int>(family) -
                                                    static_cast<int>(TransformFamily::kDct1)),
                               n);
    case TransformFamily::kGenDct2:
      return build_gen_dct(Variant::kII, n, pqr());
    case TransformFamily::kGenDct3:
      return build_gen_dct(Variant::kIII, n, pqr());
    case TransformFamily::kGenDct4:
      return build_gen_dct(Variant::kIV, n, pqr());
    case TransformFamily::kNewDct:
      expect_none();
      return build_new_dct(n);
    case TransformFamily::kNewDst:
      expect_none();
      return build_new_dst(n);
    case TransformFamily::kNewSct:
      expect_none();
      return build_new_sct(n);
    case TransformFamily::kDwtUnified:
      if (const auto* dwt = std::get_if<DwtParams>(&params)) return build_dwt_unified(n, *dwt);
      throw NotParameterized("family dwt-unified requires alpha, beta and gamma");
    case TransformFamily::kDwt1:
    case TransformFamily::kDwt2:
    case TransformFamily::kDwt3:
    case TransformFamily::kDwt4:
      expect_none();
      return build_dwt_classic(dwt_variant_of(family), n);
    case TransformFamily::kGenDwtCas:
      return build_dwt_cas(n, pqr());
    case TransformFamily::kGenDwt4:
      return build_gen_dwt4(n, pqr());
  }
  throw InvalidArgument("unknown transform family");
}

}  // namespace dtt
