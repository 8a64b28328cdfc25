#include "cli.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <optional>
#include <ostream>
#include <sstream>
#include <string_view>

#include <CLI11.hpp>
#include <json.hpp>

#include "dtt/builders.hpp"
#include "dtt/errors.hpp"
#include "dtt/io.hpp"
#include "dtt/signal_ops.hpp"
#include "dtt/validation.hpp"

namespace dtt::cli {

namespace {

// Flags naming a transform: family tag, size and its parameters.
struct FamilyFlags {
  std::string family;
  std::size_t n = 0;
  std::optional<std::int64_t> p, q, r;
  std::optional<std::string> alpha, beta;
  std::optional<std::int64_t> gamma;

  void attach(CLI::App& cmd, bool required) {
    auto* f = cmd.add_option("--family", family, "Transform family tag (dct1..dct4, gen-dct2/3/4, new-dct, "
                                                   "new-dst, new-sct, dwt1..dwt4, dwt-unified, gen-dwt-cas, gen-dwt4)");
    auto* size = cmd.add_option("--n", n, "Transform size N")->check(CLI::PositiveNumber);
    if (required) {
      f->required();
      size->required();
    }
    cmd.add_option("--p", p, "Parameter p")->check(CLI::PositiveNumber);
    cmd.add_option("--q", q, "Parameter q")->check(CLI::PositiveNumber);
    cmd.add_option("--r", r, "Parameter r")->check(CLI::PositiveNumber);
    cmd.add_option("--alpha", alpha, "dwt-unified alpha as num/den");
    cmd.add_option("--beta", beta, "dwt-unified beta as num/den");
    cmd.add_option("--gamma", gamma, "dwt-unified gamma")->check(CLI::PositiveNumber);
  }

  TransformFamily tag() const {
    const auto found = family_from_name(family);
    if (!found) throw InvalidArgument("unknown family '" + family + "'");
    return *found;
  }

  TransformParams params() const {
    const TransformFamily t = tag();
    const bool any_pqr = p || q || r;
    const bool any_dwt = alpha || beta || gamma;
    if (takes_pqr(t)) {
      if (any_dwt) throw InvalidArgument("family " + family + " takes --p, --q, --r only");
      if (!(p && q && r)) throw InvalidArgument("family " + family + " requires --p, --q and --r");
      return ParamsPQR{*p, *q, *r};
    }
    if (t == TransformFamily::kDwtUnified) {
      if (any_pqr) throw InvalidArgument("family dwt-unified takes --alpha, --beta, --gamma only");
      if (!(alpha && beta && gamma)) throw InvalidArgument("family dwt-unified requires --alpha, --beta and --gamma");
      return DwtParams{Rational::parse(*alpha), Rational::parse(*beta), *gamma};
    }
    if (any_pqr || any_dwt) throw InvalidArgument("family " + family + " takes no parameters");
    return std::monostate{};
  }

  TransformMatrix build_matrix() const { return dtt::build(tag(), n, params()); }
};

// Either --matrix PATH or the family flags.
struct MatrixSource {
  std::optional<std::string> matrix_path;
  FamilyFlags flags;

  void attach(CLI::App& cmd) {
    auto* path = cmd.add_option("--matrix", matrix_path, "Matrix CSV file");
    flags.attach(cmd, false);
    path->excludes(cmd.get_option("--family"));
  }

  // A sidecar whose params do not fit its family yields no condition rather than an error: the
  // measured Gram deviation is still meaningful.
  static std::optional<bool> condition_for(TransformFamily family, std::size_t n, const TransformParams& params) {
    try {
      if (const auto* pqr = std::get_if<ParamsPQR>(&params)) return check_conditions(family, n, *pqr).satisfied;
      if (const auto cond = check_conditions(family, n)) return cond->satisfied;
    } catch (const NotParameterized&) {
    }
    return std::nullopt;
  }

  struct Loaded {
    Matrix matrix;
    std::string family;
    std::size_t n = 0;
    TransformParams params;
    std::optional<bool> condition_satisfied;
  };

  Loaded load() const {
    if (matrix_path) {
      Matrix m = matrix_from_csv(read_text_file(*matrix_path));
      Loaded out{m, "file", m.rows(), std::monostate{}, std::nullopt};
      const auto sidecar = sidecar_path(*matrix_path);
      if (std::filesystem::exists(sidecar)) {
        MatrixMetadata meta = metadata_from_json(read_text_file(sidecar));
        out.family = meta.family;
        out.n = meta.n;
        out.params = meta.params;
        if (const auto family = family_from_name(meta.family)) {
          out.condition_satisfied = condition_for(*family, meta.n, meta.params);
        }
      }
      return out;
    }
    if (flags.family.empty()) throw InvalidArgument("either --matrix or --family/--n is required");
    if (flags.n == 0) throw InvalidArgument("--n is required with --family");
    const TransformMatrix tm = flags.build_matrix();
    return {tm.matrix(), flags.family, tm.n_param(), tm.params(),
            condition_for(tm.family(), tm.n_param(), tm.params())};
  }
};

std::vector<std::size_t> parse_n_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc{} || ptr != item.data() + item.size() || value == 0) {
      throw InvalidArgument("bad --n list entry '" + item + "'");
    }
    out.push_back(value);
  }
  if (out.empty()) throw InvalidArgument("--n list is empty");
  return out;
}

void emit(const std::optional<std::string>& path, std::string_view text, std::ostream& out) {
  if (path) {
    write_text_file(*path, text);
  } else {
    out << text;
  }
}

double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Parameterized discrete trigonometric transforms: generate, check, sweep, apply, bench", "dtt"};
  app.require_subcommand(1);

  FamilyFlags gen_flags;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Write a transform matrix as CSV plus a <out>.json sidecar");
  gen_flags.attach(*gen, true);
  gen->add_option("--out", gen_out, "Output CSV path")->required();

  MatrixSource check_source;
  double check_tol = 1e-10;
  auto* check = app.add_subcommand("check", "Report the Gram deviation of a matrix as JSON");
  check_source.attach(*check);
  check->add_option("--tol", check_tol, "Orthogonality tolerance")->check(CLI::PositiveNumber);

  std::string sweep_family;
  std::string sweep_n;
  std::optional<std::int64_t> p_max, q_max, r_max;
  double sweep_tol = 1e-10;
  std::optional<std::string> sweep_out;
  std::size_t sweep_threads = 0;
  bool printed = false;
  auto* sweep_cmd = app.add_subcommand("sweep", "Scan a (p, q, r) grid and tabulate Gram deviations as CSV");
  sweep_cmd->add_option("--family", sweep_family, "Parameterized family tag")->required();
  sweep_cmd->add_option("--n", sweep_n, "Comma-separated sizes, e.g. 4,5,6")->required();
  sweep_cmd->add_option("--p-max", p_max, "Largest p in the grid")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--q-max", q_max, "Largest q in the grid")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--r-max", r_max, "Largest r in the grid")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--tol", sweep_tol, "Orthogonality tolerance")->capture_default_str()->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--out", sweep_out, "Output CSV path (default: standard output)");
  sweep_cmd->add_option("--threads", sweep_threads, "Worker threads (0: hardware concurrency)");
  sweep_cmd->add_flag("--printed-2n", printed,
                      "dwt-unified: use the cas((2k+1)(qn+1)pi/2N) kernel instead of the unified form");

  MatrixSource apply_source;
  std::string signal_path;
  bool apply_inverse = false;
  std::optional<std::string> apply_out;
  auto* apply = app.add_subcommand("apply", "Apply a transform (or its transpose) to a signal CSV");
  apply_source.attach(*apply);
  apply->add_option("--signal", signal_path, "Signal CSV, one value per line")->required();
  apply->add_flag("--inverse", apply_inverse, "Apply the transpose (inverse) action");
  apply->add_option("--out", apply_out, "Output CSV path (default: standard output)");

  FamilyFlags bench_flags;
  std::int64_t repeats = 100;
  auto* bench = app.add_subcommand("bench", "Time matrix construction and application");
  bench_flags.attach(*bench, true);
  bench->add_option("--repeats", repeats, "Number of signals to apply");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "dtt: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*gen) {
      const TransformMatrix m = gen_flags.build_matrix();
      write_text_file(gen_out, matrix_to_csv(m));
      write_text_file(sidecar_path(gen_out), metadata_to_json({gen_flags.family, m.n_param(), m.params()}));
      return kExitOk;
    }

    if (*check) {
      const auto loaded = check_source.load();
      if (!loaded.matrix.square()) {
        throw ShapeMismatch("check needs a square matrix; columns", loaded.matrix.rows(), loaded.matrix.cols());
      }
      const OrthogonalityReport report{loaded.family,   loaded.n,        loaded.params, loaded.condition_satisfied,
                                       gram_report(loaded.matrix), check_tol};
      out << report_to_json(report);
      return report.orthogonal() ? kExitOk : kExitCheckFailed;
    }

    if (*sweep_cmd) {
      const auto family = family_from_name(sweep_family);
      if (!family) throw InvalidArgument("unknown family '" + sweep_family + "'");
      if (!takes_pqr(*family) && *family != TransformFamily::kDwtUnified) {
        throw NotParameterized("family " + sweep_family + " takes no p,q,r");
      }
      const bool unified = *family == TransformFamily::kDwtUnified;
      if (!q_max || (!unified && !(p_max && r_max))) {
        throw InvalidArgument(unified ? "dwt-unified sweep requires --q-max"
                                      : "sweep requires --p-max, --q-max and --r-max");
      }
      SweepOptions options;
      options.threads = sweep_threads;
      options.printed_special_case = printed;
      const SweepReport report = dtt::sweep(*family, parse_n_list(sweep_n), p_max.value_or(1), *q_max,
                                            r_max.value_or(1), sweep_tol, options);
      emit(sweep_out, sweep_to_csv(report), out);
      const auto violations = report.violations();
      if (printed || violations.empty()) return kExitOk;
      for (const auto* row : violations) {
        err << "dtt: condition holds but deviation " << (row->error ? *row->error : format_double(row->gram_max_dev))
            << " exceeds tolerance at n=" << row->n << " p=" << row->params.p << " q=" << row->params.q
            << " r=" << row->params.r << "\n";
      }
      return kExitCheckFailed;
    }

    if (*apply) {
      const auto loaded = apply_source.load();
      const std::vector<double> signal = vector_from_csv(read_text_file(signal_path));
      const std::vector<double> result =
          apply_inverse ? inverse(loaded.matrix, signal) : forward(loaded.matrix, signal);
      emit(apply_out, vector_to_csv(result), out);
      return kExitOk;
    }

    if (*bench) {
      if (repeats < 1) throw InvalidArgument("--repeats must be at least 1");
      auto start = std::chrono::steady_clock::now();
      const TransformMatrix m = bench_flags.build_matrix();
      const double build_ms = elapsed_ms(start);
      std::vector<std::vector<double>> signals;
      for (std::int64_t i = 0; i < repeats; ++i) {
        signals.push_back(lcg_signal(m.cols(), kDefaultSignalSeed + static_cast<std::uint32_t>(i)));
      }
      double checksum = 0.0;
      start = std::chrono::steady_clock::now();
      for (const auto& s : signals) checksum += forward(m.matrix(), s).front();
      const double apply_ms = elapsed_ms(start) / static_cast<double>(repeats);
      const nlohmann::ordered_json j{{"build_ms", build_ms},
                                     {"apply_ms_per_signal", apply_ms},
                                     {"n", m.n_param()},
                                     {"repeats", repeats}};
      out << j.dump() << "\n";
      if (!std::isfinite(checksum)) return kExitCheckFailed;
      return kExitOk;
    }
  } catch (const NotOrthogonal& e) {
    err << "dtt: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const std::exception& e) {
    err << "dtt: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace dtt::cli
