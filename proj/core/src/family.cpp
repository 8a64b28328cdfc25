#include "dtt/family.hpp"

#include <utility>

#include "dtt/errors.hpp"

namespace dtt {

namespace {

constexpr std::array<std::pair<TransformFamily, std::string_view>, kAllFamilies.size()> kNames = {{
    {TransformFamily::kDct1, "dct1"},
    {TransformFamily::kDct2, "dct2"},
    {TransformFamily::kDct3, "dct3"},
    {TransformFamily::kDct4, "dct4"},
    {TransformFamily::kGenDct2, "gen-dct2"},
    {TransformFamily::kGenDct3, "gen-dct3"},
    {TransformFamily::kGenDct4, "gen-dct4"},
    {TransformFamily::kNewDct, "new-dct"},
    {TransformFamily::kNewDst, "new-dst"},
    {TransformFamily::kNewSct, "new-sct"},
    {TransformFamily::kDwtUnified, "dwt-unified"},
    {TransformFamily::kDwt1, "dwt1"},
    {TransformFamily::kDwt2, "dwt2"},
    {TransformFamily::kDwt3, "dwt3"},
    {TransformFamily::kDwt4, "dwt4"},
    {TransformFamily::kGenDwtCas, "gen-dwt-cas"},
    {TransformFamily::kGenDwt4, "gen-dwt4"},
}};

}  // namespace

std::string_view family_name(TransformFamily family) noexcept {
  for (const auto& [tag, name] : kNames) {
    if (tag == family) return name;
  }
  return "unknown";
}

std::optional<TransformFamily> family_from_name(std::string_view name) noexcept {
  for (const auto& [tag, tag_name] : kNames) {
    if (tag_name == name) return tag;
  }
  return std::nullopt;
}

bool takes_pqr(TransformFamily family) noexcept {
  switch (family) {
    case TransformFamily::kGenDct2:
    case TransformFamily::kGenDct3:
    case TransformFamily::kGenDct4:
    case TransformFamily::kGenDwtCas:
    case TransformFamily::kGenDwt4:
      return true;
    default:
      return false;
  }
}

void ParamsPQR::validate() const {
  if (p < 1 || q < 1 || r < 1) {
    throw InvalidArgument("p, q and r must be positive integers (got p=" + std::to_string(p) +
                          ", q=" + std::to_string(q) + ", r=" + std::to_string(r) + ")");
  }
}

void DwtParams::validate() const {
  if (gamma < 1) throw InvalidArgument("gamma must be a positive integer");
}

}  // namespace dtt
