#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "dtt/rational.hpp"

namespace dtt {

/// Every transform this library can materialize. Declaration order is the
/// sort order used by sweep reports.
enum class TransformFamily {
  kDct1,
  kDct2,
  kDct3,
  kDct4,
  kGenDct2,
  kGenDct3,
  kGenDct4,
  kNewDct,
  kNewDst,
  kNewSct,
  kDwtUnified,
  kDwt1,
  kDwt2,
  kDwt3,
  kDwt4,
  kGenDwtCas,
  kGenDwt4,
};

inline constexpr std::array kAllFamilies = {
    TransformFamily::kDct1,      TransformFamily::kDct2,      TransformFamily::kDct3,
    TransformFamily::kDct4,      TransformFamily::kGenDct2,   TransformFamily::kGenDct3,
    TransformFamily::kGenDct4,   TransformFamily::kNewDct,    TransformFamily::kNewDst,
    TransformFamily::kNewSct,    TransformFamily::kDwtUnified, TransformFamily::kDwt1,
    TransformFamily::kDwt2,      TransformFamily::kDwt3,      TransformFamily::kDwt4,
    TransformFamily::kGenDwtCas, TransformFamily::kGenDwt4,
};

/// CLI tag, e.g. "gen-dct3".
std::string_view family_name(TransformFamily family) noexcept;
std::optional<TransformFamily> family_from_name(std::string_view name) noexcept;

/// True for the families driven by a (p, q, r) triple.
bool takes_pqr(TransformFamily family) noexcept;

struct ParamsPQR {
  std::int64_t p = 1;
  std::int64_t q = 1;
  std::int64_t r = 1;

  /// Throws InvalidArgument unless p, q, r >= 1.
  void validate() const;

  friend auto operator<=>(const ParamsPQR&, const ParamsPQR&) = default;
};

struct DwtParams {
  Rational alpha;
  Rational beta;
  std::int64_t gamma = 2;

  /// Throws InvalidArgument unless gamma >= 1.
  void validate() const;

  friend auto operator<=>(const DwtParams&, const DwtParams&) = default;
};

using TransformParams = std::variant<std::monostate, ParamsPQR, DwtParams>;

}  // namespace dtt
