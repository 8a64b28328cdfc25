#include "dtt/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dtt/errors.hpp"

namespace dtt {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

double parse_double(std::string_view field, std::size_t line) {
  field = trim(field);
  double value = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last) {
    throw ParseError("line " + std::to_string(line) + ": '" + std::string(field) + "' is not a number");
  }
  if (!std::isfinite(value)) {
    throw ParseError("line " + std::to_string(line) + ": non-finite value '" + std::string(field) + "'");
  }
  return value;
}

// Splits into non-empty lines, remembering 1-based line numbers.
std::vector<std::pair<std::size_t, std::string_view>> lines_of(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> out;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const auto end = text.find('\n');
    std::string_view line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    if (!trim(line).empty()) out.emplace_back(number, line);
  }
  return out;
}

ordered_json params_to_json(const TransformParams& params) {
  if (const auto* pqr = std::get_if<ParamsPQR>(&params)) {
    return ordered_json{{"p", pqr->p}, {"q", pqr->q}, {"r", pqr->r}};
  }
  if (const auto* dwt = std::get_if<DwtParams>(&params)) {
    return ordered_json{{"alpha", dwt->alpha.to_string()}, {"beta", dwt->beta.to_string()}, {"gamma", dwt->gamma}};
  }
  return nullptr;
}

TransformParams params_from_json(const nlohmann::json& j) {
  if (j.is_null()) return std::monostate{};
  if (j.contains("p")) {
    ParamsPQR out{j.at("p").get<std::int64_t>(), j.at("q").get<std::int64_t>(), j.at("r").get<std::int64_t>()};
    out.validate();
    return out;
  }
  DwtParams out{Rational::parse(j.at("alpha").get<std::string>()),
                Rational::parse(j.at("beta").get<std::string>()), j.at("gamma").get<std::int64_t>()};
  out.validate();
  return out;
}

}  // namespace

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%#.18g", value);
  return buf;
}

std::string matrix_to_csv(const Matrix& m) {
  std::string out;
  out.reserve(m.rows() * m.cols() * 26);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += ',';
      out += format_double(m(r, c));
    }
    out += '\n';
  }
  return out;
}

Matrix matrix_from_csv(std::string_view text) {
  std::vector<double> entries;
  std::size_t rows = 0;
  std::size_t cols = 0;
  for (const auto& [number, line] : lines_of(text)) {
    std::size_t fields = 0;
    std::string_view rest = line;
    while (true) {
      const auto comma = rest.find(',');
      entries.push_back(parse_double(rest.substr(0, comma), number));
      ++fields;
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    if (rows == 0) {
      cols = fields;
    } else if (fields != cols) {
      throw ParseError("line " + std::to_string(number) + ": expected " + std::to_string(cols) +
                       " fields, got " + std::to_string(fields));
    }
    ++rows;
  }
  if (rows == 0) throw ParseError("matrix file is empty");
  return Matrix(rows, cols, std::move(entries));
}

std::string vector_to_csv(std::span<const double> values) {
  std::string out;
  for (double v : values) {
    out += format_double(v);
    out += '\n';
  }
  return out;
}

std::vector<double> vector_from_csv(std::string_view text) {
  std::vector<double> out;
  for (const auto& [number, line] : lines_of(text)) {
    if (line.find(',') != std::string_view::npos) {
      throw ParseError("line " + std::to_string(number) + ": expected one value per line");
    }
    out.push_back(parse_double(line, number));
  }
  if (out.empty()) throw ParseError("signal file is empty");
  return out;
}

std::string metadata_to_json(const MatrixMetadata& meta) {
  const ordered_json j{{"family", meta.family}, {"n", meta.n}, {"params", params_to_json(meta.params)}};
  return j.dump(2) + "\n";
}

MatrixMetadata metadata_from_json(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    return {j.at("family").get<std::string>(), j.at("n").get<std::size_t>(),
            params_from_json(j.contains("params") ? j.at("params") : nlohmann::json(nullptr))};
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad matrix metadata: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("bad matrix metadata: ") + e.what());
  }
}

std::filesystem::path sidecar_path(const std::filesystem::path& matrix_path) {
  return std::filesystem::path(matrix_path.string() + ".json");
}

std::string report_to_json(const OrthogonalityReport& report) {
  ordered_json j;
  j["family"] = report.family;
  j["n"] = report.n;
  j["params"] = params_to_json(report.params);
  j["condition_satisfied"] =
      report.condition_satisfied ? ordered_json(*report.condition_satisfied) : ordered_json(nullptr);
  j["max_offdiag"] = report.gram.max_offdiag;
  j["max_diag_dev"] = report.gram.max_diag_dev;
  j["orthogonal"] = report.orthogonal();
  j["tolerance"] = report.tolerance;
  return j.dump(2) + "\n";
}

std::string sweep_to_csv(const SweepReport& report) {
  std::ostringstream out;
  out << "family,n,p,q,r,condition_satisfied,gram_max_dev\n";
  for (const auto& row : report.rows) {
    out << family_name(row.family) << ',' << row.n << ',' << row.params.p << ',' << row.params.q << ','
        << row.params.r << ',' << (row.condition_satisfied ? "true" : "false") << ','
        << (row.error ? std::string("error") : format_double(row.gram_max_dev)) << '\n';
  }
  return out.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

}  // namespace dtt
