#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hadinv/cli.hpp"
#include "hadinv/matrix_io.hpp"

using namespace hadinv;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "hadinv_cli_unit";
  fs::create_directories(dir);
  return dir;
}

std::string write(const std::string& name, const MatrixValue& v) {
  const fs::path p = scratch_dir() / name;
  write_matrix(p, v);
  return p.string();
}

}  // namespace

TEST_CASE("det on the identity with zero phases") {
  const std::string a = write("i2.json", identity(2));
  const std::string t = write("zero2.json", AngleMatrix({0, 0}, {0, 0}));
  const Result r = run({"det", "--matrix", a, "--angle", t});
  CHECK(r.code == 0);
  CHECK(r.out.find("structured: 1+0j") != std::string::npos);
  CHECK(r.out.find("lu_oracle: 1+0j") != std::string::npos);
  CHECK(r.out.find("difference: 0\n") != std::string::npos);
}

TEST_CASE("inv and pinv") {
  const std::string a = write("upper.json", DenseMatrix{{1, 1}, {0, 1}});
  const std::string t = write("half.json", AngleMatrix({0, 3.141592653589793}, {0, 1.5707963267948966}));
  const Result r = run({"inv", "--matrix", a, "--angle", t, "--oracle"});
  CHECK(r.code == 0);
  const DenseMatrix x = std::get<DenseMatrix>(parse_matrix(r.out));
  CHECK(max_abs_diff(x, DenseMatrix{{1, 1}, {0, Complex(0, 1)}}) <= 1e-15);
  CHECK(r.err.find("pass: true") != std::string::npos);

  const fs::path out = scratch_dir() / "pinv_out.json";
  const std::string tall = write("tall.json", DenseMatrix{{1}, {1}});
  const std::string tt = write("tall_angle.json", AngleMatrix({0, 1.5707963267948966}, {0}));
  const Result p = run({"pinv", "--matrix", tall, "--angle", tt, "--out", out.string()});
  CHECK(p.code == 0);
  CHECK(max_abs_diff(read_dense(out), DenseMatrix{{0.5, Complex(0, -0.5)}}) <= 1e-15);

  CHECK(run({"inv", "--matrix", tall, "--angle", tt}).code == cli::kExitUsage);
}

TEST_CASE("error exit codes") {
  const std::string sing = write("singular.json", DenseMatrix{{1, 2}, {2, 4}});
  const std::string t = write("zero2b.json", AngleMatrix({0, 0}, {0, 0}));
  CHECK(run({"inv", "--matrix", sing, "--angle", t}).code == cli::kExitNumerical);
  CHECK(run({"det", "--matrix", sing, "--angle", t}).code == 0);

  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == cli::kExitUsage);
  CHECK(run({"gen", "--rows", "2"}).code == cli::kExitUsage);
  CHECK(run({"verify", "--suite", "nope"}).code == cli::kExitUsage);
  CHECK(run({"det", "--matrix", (scratch_dir() / "absent.json").string(), "--angle", t}).code ==
        cli::kExitUsage);
  CHECK(run({"--rank-eps", "-1", "verify", "--suite", "lemma1", "--trials", "1"}).code == cli::kExitUsage);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("gen is deterministic") {
  const Result a = run({"gen", "--rows", "3", "--cols", "2", "--seed", "5"});
  const Result b = run({"gen", "--rows", "3", "--cols", "2", "--seed", "5"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(std::get<DenseMatrix>(parse_matrix(a.out)).rows() == 3);
  const Result c = run({"gen", "--rows", "3", "--cols", "2", "--seed", "5", "--angle"});
  CHECK(std::get<AngleMatrix>(parse_matrix(c.out)).cols() == 2);
}

TEST_CASE("verify writes a report") {
  const Result r = run({"verify", "--suite", "lemma1", "--trials", "20", "--seed", "7"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"name\": \"lemma1\"") != std::string::npos);
  CHECK(r.out.find("\"pass\": true") != std::string::npos);
  const Result strict = run({"--entry-eps", "1e-12", "verify", "--suite", "lemma2", "--trials", "5"});
  CHECK(strict.code == 0);
}

TEST_CASE("bench appends CSV rows") {
  const fs::path csv = scratch_dir() / "bench.csv";
  fs::remove(csv);
  CHECK(run({"bench", "--rows", "4", "--cols", "3", "--updates", "5", "--csv", csv.string()}).code == 0);
  CHECK(run({"bench", "--rows", "4", "--cols", "3", "--updates", "5", "--csv", csv.string()}).code == 0);
  std::ifstream in(csv);
  std::string header;
  std::getline(in, header);
  CHECK(header == bench_csv_header());
  int rows = 0;
  for (std::string line; std::getline(in, line);) {
    CHECK(line.rfind("4,3,5,", 0) == 0);
    ++rows;
  }
  CHECK(rows == 2);
  const Result stdout_csv = run({"bench", "--rows", "2", "--cols", "2", "--updates", "2", "--csv", "-"});
  CHECK(stdout_csv.out.rfind(std::string(bench_csv_header()), 0) == 0);
}
