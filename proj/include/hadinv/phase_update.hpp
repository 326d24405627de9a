#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "hadinv/angle.hpp"
#include "hadinv/core/matrix.hpp"

namespace hadinv {

/// A^-1 (square) or A^+ (rectangular), computed once and reused for every
/// angle-matrix update. Immutable after construction.
class PrecomputedBase {
 public:
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const DenseMatrix& base_pinv() const noexcept { return base_pinv_; }
  double base_norm() const noexcept { return base_norm_; }
  std::optional<std::uint64_t> created_from_seed() const noexcept { return seed_; }

 private:
  friend PrecomputedBase precompute(const DenseMatrix&, const ToleranceConfig&,
                                    std::optional<std::uint64_t>);
  PrecomputedBase(std::size_t rows, std::size_t cols, DenseMatrix pinv, double norm,
                  std::optional<std::uint64_t> seed)
      : rows_(rows), cols_(cols), base_pinv_(std::move(pinv)), base_norm_(norm), seed_(seed) {}

  std::size_t rows_;
  std::size_t cols_;
  DenseMatrix base_pinv_;
  double base_norm_;
  std::optional<std::uint64_t> seed_;
};

/// One pseudoinversion of A followed by a Penrose check; a failing check
/// raises NumericalError.
PrecomputedBase precompute(const DenseMatrix& a, const ToleranceConfig& tol = {},
                           std::optional<std::uint64_t> seed = std::nullopt);

/// base_pinv o Theta^H in O(mn) multiplies and O(m+n) sin/cos; no factorization.
DenseMatrix apply_update(const PrecomputedBase& base, const AngleMatrix& t);

/// Reference path: materialize, mask, and pseudoinvert from scratch.
/// Failure on a masked full-rank matrix is an InternalConsistencyError.
DenseMatrix naive_update(const DenseMatrix& a, const AngleMatrix& t,
                         const ToleranceConfig& tol = {});

/// Phases of update k in a seeded stream, uniform in [0, 2 pi).
AngleMatrix update_angles(std::uint64_t seed, std::uint64_t update_index, std::size_t rows,
                          std::size_t cols);

struct BenchConfig {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t updates = 1;
  std::uint64_t seed = 0;
  ToleranceConfig tol{};
  std::size_t dimension_cap = 2048;
};

struct BenchRecord {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t updates = 0;
  double structured_ns_per_update = 0.0;  ///< median, first update excluded when updates > 1
  double naive_ns_per_update = 0.0;
  double max_residual = 0.0;  ///< max ||X_structured - X_naive||_F over checked updates
  std::uint64_t seed = 0;
  std::size_t checked_updates = 0;
  double residual_tolerance = 0.0;  ///< residual_eps * max(m, n)
  bool passed = false;
};

/// Generates A and the update stream from the seed, times both paths per
/// update on one thread, and cross-checks at least max(1, updates / 100)
/// updates against the naive path.
BenchRecord run_benchmark(const BenchConfig& config);

/// Matrix generated by run_benchmark for this seed and shape.
DenseMatrix benchmark_base_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed,
                                  const ToleranceConfig& tol = {});

}  // namespace hadinv
