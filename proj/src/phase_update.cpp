#include "hadinv/phase_update.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <string>

#include "hadinv/core/errors.hpp"
#include "hadinv/core/hadamard.hpp"
#include "hadinv/core/kernels.hpp"
#include "hadinv/pseudo_inverse.hpp"
#include "hadinv/random.hpp"

namespace hadinv {

namespace {

constexpr std::uint64_t kBaseStream = 0xba5e;
constexpr std::uint64_t kUpdateStream = 0x0bda7e;

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

PrecomputedBase precompute(const DenseMatrix& a, const ToleranceConfig& tol,
                           std::optional<std::uint64_t> seed) {
  DenseMatrix pinv = pinv_full_rank(a, tol);
  const PenroseReport check = penrose_check(a, pinv, tol);
  if (!check.pass) {
    const double worst = std::max({check.r1, check.r2, check.r3, check.r4});
    throw NumericalError("precompute: base pseudoinverse fails the Penrose check (residual " +
                             std::to_string(worst) + ")",
                         worst);
  }
  return PrecomputedBase(a.rows(), a.cols(), std::move(pinv), frobenius_norm(a), seed);
}

DenseMatrix apply_update(const PrecomputedBase& base, const AngleMatrix& t) {
  if (t.rows() != base.rows() || t.cols() != base.cols()) {
    throw DimensionError("apply_update: angle matrix is " + std::to_string(t.rows()) + " x " +
                         std::to_string(t.cols()) + ", base shape is " +
                         std::to_string(base.rows()) + " x " + std::to_string(base.cols()));
  }
  // X_ik = P_ik e^{-j phi_i} e^{-j theta_k}, with P = A^+ of shape n x m
  std::vector<Complex> col_phase(t.rows());
  for (std::size_t k = 0; k < t.rows(); ++k) col_phase[k] = std::polar(1.0, -t.theta()[k]);

  const DenseMatrix& p = base.base_pinv();
  DenseMatrix out(p.rows(), p.cols());
  const auto& kern = kernels::active();
  for (std::size_t i = 0; i < p.rows(); ++i) {
    kern.mask_row(p.row(i).data(), col_phase.data(), std::polar(1.0, -t.phi()[i]),
                  out.row(i).data(), p.cols());
  }
  return out;
}

DenseMatrix naive_update(const DenseMatrix& a, const AngleMatrix& t, const ToleranceConfig& tol) {
  if (a.rows() != t.rows() || a.cols() != t.cols()) {
    throw DimensionError("naive_update: A is " + a.shape_string() + ", Theta is " +
                         std::to_string(t.rows()) + " x " + std::to_string(t.cols()));
  }
  const DenseMatrix masked = hadamard_product(a, materialize(t));
  try {
    return pinv_full_rank(masked, tol);
  } catch (const NumericalError& e) {
    throw InternalConsistencyError(
        std::string("naive_update: masked matrix lost rank, base must not be full rank: ") +
            e.what(),
        e.pivot());
  }
}

AngleMatrix update_angles(std::uint64_t seed, std::uint64_t update_index, std::size_t rows,
                          std::size_t cols) {
  const std::uint64_t key = counter_hash(seed, kUpdateStream, update_index);
  std::vector<double> theta(rows);
  std::vector<double> phi(cols);
  for (std::size_t i = 0; i < rows; ++i) theta[i] = 2.0 * std::numbers::pi * uniform_at(key, 0, i);
  for (std::size_t k = 0; k < cols; ++k) phi[k] = 2.0 * std::numbers::pi * uniform_at(key, 1, k);
  return AngleMatrix(std::move(theta), std::move(phi));
}

DenseMatrix benchmark_base_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed,
                                  const ToleranceConfig& tol) {
  Rng rng(seed, kBaseStream);
  return random_full_rank(rows, cols, rng, tol);
}

BenchRecord run_benchmark(const BenchConfig& config) {
  config.tol.validate();
  if (config.updates < 1) throw InvalidArgument("run_benchmark: updates must be >= 1");
  if (config.rows < 1 || config.cols < 1 || config.rows > config.dimension_cap ||
      config.cols > config.dimension_cap) {
    throw InvalidArgument("run_benchmark: dimensions " + std::to_string(config.rows) + " x " +
                          std::to_string(config.cols) + " outside [1, " +
                          std::to_string(config.dimension_cap) + "]");
  }

  const DenseMatrix a = benchmark_base_matrix(config.rows, config.cols, config.seed, config.tol);
  const PrecomputedBase base = precompute(a, config.tol, config.seed);

  using clock = std::chrono::steady_clock;
  std::vector<double> structured_ns;
  std::vector<double> naive_ns;
  structured_ns.reserve(config.updates);
  naive_ns.reserve(config.updates);

  BenchRecord rec;
  rec.rows = config.rows;
  rec.cols = config.cols;
  rec.updates = config.updates;
  rec.seed = config.seed;
  rec.residual_tolerance =
      config.tol.residual_eps * static_cast<double>(std::max(config.rows, config.cols));

  // naive runs for every update for timing, so every update is cross-checked
  for (std::size_t k = 0; k < config.updates; ++k) {
    const AngleMatrix t = update_angles(config.seed, k, config.rows, config.cols);

    const auto s0 = clock::now();
    const DenseMatrix fast = apply_update(base, t);
    const auto s1 = clock::now();
    const DenseMatrix slow = naive_update(a, t, config.tol);
    const auto s2 = clock::now();

    structured_ns.push_back(std::chrono::duration<double, std::nano>(s1 - s0).count());
    naive_ns.push_back(std::chrono::duration<double, std::nano>(s2 - s1).count());

    const double r = frobenius_diff(fast, slow);
    if (!(r <= rec.max_residual)) rec.max_residual = r;
    ++rec.checked_updates;
  }

  if (structured_ns.size() > 1) {
    structured_ns.erase(structured_ns.begin());
    naive_ns.erase(naive_ns.begin());
  }
  rec.structured_ns_per_update = median(std::move(structured_ns));
  rec.naive_ns_per_update = median(std::move(naive_ns));
  rec.passed = rec.max_residual <= rec.residual_tolerance;
  return rec;
}

}  // namespace hadinv
