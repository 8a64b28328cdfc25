#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dtt/family.hpp"
#include "dtt/matrix.hpp"
#include "dtt/validation.hpp"

namespace dtt {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Fixed-width round-trip text form ("%#.18g" in the C locale), e.g.
/// -1.00000000000000000 or 6.12323399573676604e-17.
std::string format_double(double value);

/// One matrix row per line, comma separated, no header.
std::string matrix_to_csv(const Matrix& m);
Matrix matrix_from_csv(std::string_view text);

/// One value per line.
std::string vector_to_csv(std::span<const double> values);
std::vector<double> vector_from_csv(std::string_view text);

/// Metadata written next to a matrix CSV as <path>.json.
struct MatrixMetadata {
  std::string family;
  std::size_t n = 0;
  TransformParams params;
};

std::string metadata_to_json(const MatrixMetadata& meta);
MatrixMetadata metadata_from_json(std::string_view text);
std::filesystem::path sidecar_path(const std::filesystem::path& matrix_path);

/// The orthogonality report printed by `check`.
struct OrthogonalityReport {
  std::string family;
  std::size_t n = 0;
  TransformParams params;
  std::optional<bool> condition_satisfied;
  GramReport gram;
  double tolerance = 1e-10;

  bool orthogonal() const noexcept { return gram.orthogonal_at(tolerance); }
};

std::string report_to_json(const OrthogonalityReport& report);

/// Header family,n,p,q,r,condition_satisfied,gram_max_dev; rows whose
/// builder failed print "error" in the deviation column.
std::string sweep_to_csv(const SweepReport& report);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace dtt
