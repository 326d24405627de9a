#pragma once

// Reproducible instance generation. The generator is the SplitMix64 output
// function applied to a (seed, stream, counter) triple, so any draw can be
// recomputed from its coordinates without replaying a sequence. Normals use
// Box-Muller on two consecutive uniforms.

#include <cstddef>
#include <cstdint>

#include "hadinv/angle.hpp"
#include "hadinv/core/matrix.hpp"

namespace hadinv {

std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Hash of the triple; the basis of every random draw in the project.
std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t stream,
                           std::uint64_t counter) noexcept;

/// Uniform double in [0, 1) with 53 random bits.
double uniform_at(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) noexcept;

/// Sequential view over one (seed, stream) pair.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) noexcept
      : seed_(seed), stream_(stream) {}

  std::uint64_t next_u64() noexcept { return counter_hash(seed_, stream_, counter_++); }
  double uniform() noexcept;
  /// Uniform integer in [lo, hi].
  std::size_t uniform_int(std::size_t lo, std::size_t hi) noexcept;
  double normal() noexcept;
  double phase() noexcept;  ///< uniform in [0, 2 pi)

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t counter_ = 0;
};

/// Real and imaginary parts i.i.d. standard normal.
DenseMatrix random_complex_matrix(std::size_t rows, std::size_t cols, Rng& rng);

/// Phases uniform in [0, 2 pi).
AngleMatrix random_angle_matrix(std::size_t rows, std::size_t cols, Rng& rng);

/// Draws random_complex_matrix until it is full rank with
/// condition_proxy <= tol.condition_cap. Throws InvalidArgument after
/// max_attempts rejections.
DenseMatrix random_full_rank(std::size_t rows, std::size_t cols, Rng& rng,
                             const ToleranceConfig& tol = {}, std::size_t max_attempts = 1000);

}  // namespace hadinv
