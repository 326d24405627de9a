#pragma once

// Text formats.
//
// Matrix file (JSON):
//   {"kind": "dense", "rows": m, "cols": n, "data": [[re, im], ...]}   row-major, m*n pairs
//   {"kind": "angle", "theta": [...m radians], "phi": [...n radians]}
// Numbers are written as round-trip decimals, so reading a written file
// reproduces every double bit for bit.
//
// Bench CSV: header rows,cols,updates,structured_ns,naive_ns,max_residual,seed

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "hadinv/angle.hpp"
#include "hadinv/core/matrix.hpp"
#include "hadinv/phase_update.hpp"
#include "hadinv/report.hpp"

namespace hadinv {

using MatrixValue = std::variant<DenseMatrix, AngleMatrix>;

/// Throws ParseError with line/column or field context.
MatrixValue parse_matrix(std::string_view text, std::string_view source = "<string>");
std::string format_matrix(const MatrixValue& value);

MatrixValue read_matrix(const std::filesystem::path& path);
void write_matrix(const std::filesystem::path& path, const MatrixValue& value);

/// read_matrix, then require the given kind.
DenseMatrix read_dense(const std::filesystem::path& path);
AngleMatrix read_angle(const std::filesystem::path& path);

std::string_view bench_csv_header() noexcept;
std::string bench_csv_row(const BenchRecord& record);
/// Appends one row, writing the header first when the file is new or empty.
void append_bench_csv(const std::filesystem::path& path, const BenchRecord& record);

/// Machine-readable result of a verify run (JSON, schema_version 1). Two
/// runs with equal command and seed differ only in the wall_time_ms line.
struct RunReport {
  std::vector<std::string> command;
  std::uint64_t seed = 0;
  ToleranceConfig tolerances{};
  std::vector<std::pair<std::string, VerificationReport>> suites;
  double wall_time_ms = 0.0;

  bool passed() const noexcept;
};

inline constexpr int kRunReportSchemaVersion = 1;

std::string format_run_report(const RunReport& report);

/// Shortest round-trip decimal for a double.
std::string format_double(double value);
/// "re+imj" / "re-imj" using format_double.
std::string format_complex(Complex value);

}  // namespace hadinv
