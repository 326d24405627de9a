#include "hadinv/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "hadinv/core/errors.hpp"
#include "hadinv/core/hadamard.hpp"
#include "hadinv/core/lu.hpp"
#include "hadinv/matrix_io.hpp"
#include "hadinv/phase_update.hpp"
#include "hadinv/pseudo_inverse.hpp"
#include "hadinv/random.hpp"
#include "hadinv/structured_inverse.hpp"
#include "hadinv/verify.hpp"

namespace hadinv::cli {

namespace {

constexpr std::uint64_t kGenStream = 0x6e6e;

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw InvalidArgument(path + ": cannot open for writing");
  f << text;
}

struct Options {
  ToleranceConfig tol;

  std::size_t rows = 0;
  std::size_t cols = 0;
  std::uint64_t seed = 0;
  bool angle_flag = false;
  std::string out = "-";

  std::string matrix_path;
  std::string angle_path;
  bool oracle = false;
  std::string oracle_out;

  std::string suite;
  std::size_t trials = 100;
  std::string report = "-";

  std::size_t updates = 100;
  std::string csv = "bench.csv";
};

int cmd_gen(const Options& o, std::ostream& out) {
  Rng rng(o.seed, kGenStream);
  MatrixValue v = o.angle_flag ? MatrixValue(random_angle_matrix(o.rows, o.cols, rng))
                               : MatrixValue(random_complex_matrix(o.rows, o.cols, rng));
  emit(o.out, format_matrix(v), out);
  return kExitOk;
}

int cmd_det(const Options& o, std::ostream& out) {
  const DenseMatrix a = read_dense(o.matrix_path);
  const AngleMatrix t = read_angle(o.angle_path);
  const Complex structured = det_structured(a, t, o.tol);
  const Complex oracle = det_lu(hadamard_product(a, materialize(t)), o.tol);
  out << "structured: " << format_complex(structured) << "\n";
  out << "lu_oracle: " << format_complex(oracle) << "\n";
  out << "difference: " << format_double(std::abs(structured - oracle)) << "\n";
  return kExitOk;
}

int cmd_inverse(const Options& o, bool pseudo, std::ostream& out, std::ostream& err) {
  const DenseMatrix a = read_dense(o.matrix_path);
  const AngleMatrix t = read_angle(o.angle_path);
  const DenseMatrix x = pseudo ? pinv_structured(a, t, o.tol) : inverse_structured(a, t, o.tol);
  emit(o.out, format_matrix(x), out);
  if (!o.oracle) return kExitOk;

  const DenseMatrix b = hadamard_product(a, materialize(t));
  const DenseMatrix naive = pseudo ? pinv_full_rank(b, o.tol) : inverse_lu(b, o.tol);
  if (!o.oracle_out.empty()) emit(o.oracle_out, format_matrix(naive), out);

  std::ostream& summary = o.out == "-" ? err : out;
  summary << "structured_vs_oracle: " << format_double(frobenius_diff(x, naive)) << "\n";
  const PenroseReport pen = penrose_check(b, x, o.tol);
  summary << "penrose_r1: " << format_double(pen.r1) << "\n";
  summary << "penrose_r2: " << format_double(pen.r2) << "\n";
  summary << "penrose_r3: " << format_double(pen.r3) << "\n";
  summary << "penrose_r4: " << format_double(pen.r4) << "\n";
  summary << "penrose_tolerance: " << format_double(pen.tolerance) << "\n";
  summary << "pass: " << (pen.pass ? "true" : "false") << "\n";
  return pen.pass ? kExitOk : kExitVerificationFailed;
}

int cmd_verify(const Options& o, const std::vector<std::string>& args, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  verify::SuiteConfig cfg{o.trials, o.seed, o.tol};
  RunReport report;
  report.command = args;
  report.seed = o.seed;
  report.tolerances = o.tol;
  report.suites = verify::run_suite(o.suite, cfg);
  report.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  emit(o.report, format_run_report(report), out);
  return report.passed() ? kExitOk : kExitVerificationFailed;
}

int cmd_bench(const Options& o, std::ostream& out, std::ostream& err) {
  BenchConfig cfg;
  cfg.rows = o.rows;
  cfg.cols = o.cols;
  cfg.updates = o.updates;
  cfg.seed = o.seed;
  cfg.tol = o.tol;
  const BenchRecord rec = run_benchmark(cfg);
  if (o.csv == "-") {
    out << bench_csv_header() << "\n" << bench_csv_row(rec) << "\n";
  } else {
    append_bench_csv(o.csv, rec);
  }
  if (!rec.passed) {
    err << "bench: max residual " << format_double(rec.max_residual) << " exceeds "
        << format_double(rec.residual_tolerance) << "\n";
    return kExitVerificationFailed;
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Structured inverses of Hadamard products with rank-one angle matrices",
               "hadinv"};
  app.require_subcommand(1);
  Options o;

  app.add_option("--entry-eps", o.tol.entry_eps, "zero test for entries")->capture_default_str();
  app.add_option("--residual-eps", o.tol.residual_eps, "residual scale")->capture_default_str();
  app.add_option("--rank-eps", o.tol.rank_eps, "relative LU pivot threshold")
      ->capture_default_str();
  app.add_option("--condition-cap", o.tol.condition_cap, "condition proxy cap for random instances")
      ->capture_default_str();

  auto* gen = app.add_subcommand("gen", "write a random dense or angle matrix file");
  gen->add_option("--rows", o.rows)->required()->check(CLI::PositiveNumber);
  gen->add_option("--cols", o.cols)->required()->check(CLI::PositiveNumber);
  gen->add_option("--seed", o.seed)->capture_default_str();
  gen->add_flag("--angle", o.angle_flag, "uniform phases instead of complex normal entries");
  gen->add_option("--out", o.out, "output path, - for stdout")->capture_default_str();

  auto* det = app.add_subcommand("det", "structured and LU determinants of A o Theta");
  det->add_option("--matrix", o.matrix_path)->required();
  det->add_option("--angle", o.angle_path)->required();

  CLI::App* inv = app.add_subcommand("inv", "structured inverse of A o Theta");
  CLI::App* pinv = app.add_subcommand("pinv", "structured pseudoinverse of A o Theta");
  for (CLI::App* sub : {inv, pinv}) {
    sub->add_option("--matrix", o.matrix_path)->required();
    sub->add_option("--angle", o.angle_path)->required();
    sub->add_flag("--oracle", o.oracle, "also compute the naive result and residuals");
    sub->add_option("--out", o.out, "result path, - for stdout")->capture_default_str();
    sub->add_option("--oracle-out", o.oracle_out, "path for the naive result (with --oracle)");
  }

  auto* ver = app.add_subcommand("verify", "randomized property suites");
  ver->add_option("--suite", o.suite)
      ->required()
      ->check(CLI::IsMember({"lemma1", "lemma2", "lemma3", "thm1", "thm2", "all"}));
  ver->add_option("--trials", o.trials)->capture_default_str();
  ver->add_option("--seed", o.seed)->capture_default_str();
  ver->add_option("--report", o.report, "report path, - for stdout")->capture_default_str();

  auto* bench = app.add_subcommand("bench", "time structured vs naive updates, append a CSV row");
  bench->add_option("--rows", o.rows)->required()->check(CLI::PositiveNumber);
  bench->add_option("--cols", o.cols)->required()->check(CLI::PositiveNumber);
  bench->add_option("--updates", o.updates)->capture_default_str()->check(CLI::PositiveNumber);
  bench->add_option("--seed", o.seed)->capture_default_str();
  bench->add_option("--csv", o.csv, "CSV path, - for stdout")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    o.tol.validate();
    if (gen->parsed()) return cmd_gen(o, out);
    if (det->parsed()) return cmd_det(o, out);
    if (inv->parsed()) return cmd_inverse(o, false, out, err);
    if (pinv->parsed()) return cmd_inverse(o, true, out, err);
    if (ver->parsed()) return cmd_verify(o, args, out);
    if (bench->parsed()) return cmd_bench(o, out, err);
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace hadinv::cli
