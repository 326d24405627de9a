#include "hadinv/matrix_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hadinv/core/errors.hpp"

namespace hadinv {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void field_error(std::string_view source, const std::string& field,
                              const std::string& msg) {
  throw ParseError(std::string(source) + ": field '" + field + "': " + msg);
}

const json& require_field(const json& obj, std::string_view source, const char* field) {
  auto it = obj.find(field);
  if (it == obj.end()) field_error(source, field, "missing");
  return *it;
}

double read_number(const json& v, std::string_view source, const std::string& field) {
  if (!v.is_number()) field_error(source, field, "expected a number, got " + v.dump());
  const double d = v.get<double>();
  if (!std::isfinite(d)) field_error(source, field, "value is not finite");
  return d;
}

std::size_t read_dim(const json& v, std::string_view source, const char* field) {
  if (!v.is_number_integer() || v.get<long long>() <= 0) {
    field_error(source, field, "expected a positive integer, got " + v.dump());
  }
  return v.get<std::size_t>();
}

std::vector<double> read_phases(const json& obj, std::string_view source, const char* field) {
  const json& arr = require_field(obj, source, field);
  if (!arr.is_array() || arr.empty()) field_error(source, field, "expected a non-empty array");
  std::vector<double> out;
  out.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    out.push_back(read_number(arr[i], source, std::string(field) + "[" + std::to_string(i) + "]"));
  }
  return out;
}

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw InvalidArgument(std::string("cannot serialize non-finite ") + what);
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, end);
}

std::string format_complex(Complex value) {
  const double im = value.imag() == 0.0 ? 0.0 : value.imag();  // drop the sign of -0
  const double re = value.real() == 0.0 ? 0.0 : value.real();
  std::string out = format_double(re);
  out += std::signbit(im) ? "-" : "+";
  out += format_double(std::abs(im));
  out += "j";
  return out;
}

MatrixValue parse_matrix(std::string_view text, std::string_view source) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::exception& e) {
    throw ParseError(std::string(source) + ": " + e.what());
  }
  if (!doc.is_object()) throw ParseError(std::string(source) + ": top level must be an object");
  const json& kind = require_field(doc, source, "kind");
  if (!kind.is_string()) field_error(source, "kind", "expected a string");
  const std::string k = kind.get<std::string>();

  if (k == "angle") {
    return AngleMatrix(read_phases(doc, source, "theta"), read_phases(doc, source, "phi"));
  }
  if (k != "dense") field_error(source, "kind", "unknown value '" + k + "' (dense|angle)");

  const std::size_t rows = read_dim(require_field(doc, source, "rows"), source, "rows");
  const std::size_t cols = read_dim(require_field(doc, source, "cols"), source, "cols");
  const json& data = require_field(doc, source, "data");
  if (!data.is_array()) field_error(source, "data", "expected an array of [re, im] pairs");
  if (data.size() != rows * cols) {
    field_error(source, "data",
                "has " + std::to_string(data.size()) + " entries, rows*cols = " +
                    std::to_string(rows * cols));
  }
  std::vector<Complex> values;
  values.reserve(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    const std::string field = "data[" + std::to_string(i) + "]";
    const json& pair = data[i];
    if (!pair.is_array() || pair.size() != 2) field_error(source, field, "expected [re, im]");
    const double re = read_number(pair[0], source, field + "[0]");
    const double im = read_number(pair[1], source, field + "[1]");
    values.emplace_back(re, im);
  }
  return DenseMatrix(rows, cols, std::move(values));
}

std::string format_matrix(const MatrixValue& value) {
  json doc;
  if (const auto* dense = std::get_if<DenseMatrix>(&value)) {
    doc["kind"] = "dense";
    doc["rows"] = dense->rows();
    doc["cols"] = dense->cols();
    json data = json::array();
    for (Complex z : dense->data()) {
      require_finite(z.real(), "matrix entry");
      require_finite(z.imag(), "matrix entry");
      data.push_back(json::array({z.real(), z.imag()}));
    }
    doc["data"] = std::move(data);
  } else {
    const auto& angle = std::get<AngleMatrix>(value);
    doc["kind"] = "angle";
    doc["theta"] = angle.theta();
    doc["phi"] = angle.phi();
  }
  return doc.dump() + "\n";
}

MatrixValue read_matrix(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix(buf.str(), path.string());
}

void write_matrix(const std::filesystem::path& path, const MatrixValue& value) {
  const std::string text = format_matrix(value);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InvalidArgument(path.string() + ": cannot open for writing");
  out << text;
  if (!out) throw InvalidArgument(path.string() + ": write failed");
}

DenseMatrix read_dense(const std::filesystem::path& path) {
  MatrixValue v = read_matrix(path);
  if (auto* d = std::get_if<DenseMatrix>(&v)) return std::move(*d);
  throw ParseError(path.string() + ": field 'kind': expected 'dense', got 'angle'");
}

AngleMatrix read_angle(const std::filesystem::path& path) {
  MatrixValue v = read_matrix(path);
  if (auto* t = std::get_if<AngleMatrix>(&v)) return std::move(*t);
  throw ParseError(path.string() + ": field 'kind': expected 'angle', got 'dense'");
}

std::string_view bench_csv_header() noexcept {
  return "rows,cols,updates,structured_ns,naive_ns,max_residual,seed";
}

std::string bench_csv_row(const BenchRecord& r) {
  return std::to_string(r.rows) + "," + std::to_string(r.cols) + "," +
         std::to_string(r.updates) + "," + format_double(r.structured_ns_per_update) + "," +
         format_double(r.naive_ns_per_update) + "," + format_double(r.max_residual) + "," +
         std::to_string(r.seed);
}

void append_bench_csv(const std::filesystem::path& path, const BenchRecord& record) {
  std::error_code ec;
  const bool fresh = !std::filesystem::exists(path, ec) || std::filesystem::file_size(path, ec) == 0;
  std::ofstream out(path, std::ios::app);
  if (!out) throw InvalidArgument(path.string() + ": cannot open for appending");
  if (fresh) out << bench_csv_header() << "\n";
  out << bench_csv_row(record) << "\n";
  if (!out) throw InvalidArgument(path.string() + ": write failed");
}

bool RunReport::passed() const noexcept {
  for (const auto& [name, rep] : suites) {
    if (!rep.passed()) return false;
  }
  return true;
}

std::string format_run_report(const RunReport& report) {
  json doc;
  doc["schema"] = "hadinv.run_report";
  doc["schema_version"] = kRunReportSchemaVersion;
  doc["command"] = report.command;
  doc["seed"] = report.seed;
  doc["tolerances"] = {{"entry_eps", report.tolerances.entry_eps},
                       {"residual_eps", report.tolerances.residual_eps},
                       {"rank_eps", report.tolerances.rank_eps},
                       {"condition_cap", report.tolerances.condition_cap}};
  json suites = json::array();
  for (const auto& [name, rep] : report.suites) {
    json checks = json::array();
    for (const CheckResult& c : rep.checks()) {
      checks.push_back({{"name", c.name},
                        {"samples", c.samples},
                        {"residual", c.residual},
                        {"tolerance", c.tolerance},
                        {"pass", c.pass}});
    }
    suites.push_back({{"name", name}, {"pass", rep.passed()}, {"checks", std::move(checks)}});
  }
  doc["suites"] = std::move(suites);
  doc["pass"] = report.passed();
  doc["wall_time_ms"] = report.wall_time_ms;
  return doc.dump(2) + "\n";
}

}  // namespace hadinv
