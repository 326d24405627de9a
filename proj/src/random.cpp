#include "hadinv/random.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hadinv/core/errors.hpp"
#include "hadinv/pseudo_inverse.hpp"

namespace hadinv {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t stream,
                           std::uint64_t counter) noexcept {
  return splitmix64(splitmix64(splitmix64(seed) ^ stream) ^ counter);
}

double uniform_at(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) noexcept {
  return static_cast<double>(counter_hash(seed, stream, counter) >> 11) * 0x1.0p-53;
}

double Rng::uniform() noexcept { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

std::size_t Rng::uniform_int(std::size_t lo, std::size_t hi) noexcept {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  // span is tiny in practice; modulo bias is below 2^-50
  return lo + static_cast<std::size_t>(next_u64() % span);
}

double Rng::normal() noexcept {
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

double Rng::phase() noexcept { return 2.0 * std::numbers::pi * uniform(); }

DenseMatrix random_complex_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
  std::vector<Complex> data(rows * cols);
  for (Complex& z : data) {
    const double re = rng.normal();
    const double im = rng.normal();
    z = {re, im};
  }
  return DenseMatrix(rows, cols, std::move(data));
}

AngleMatrix random_angle_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
  std::vector<double> theta(rows);
  std::vector<double> phi(cols);
  for (double& v : theta) v = rng.phase();
  for (double& v : phi) v = rng.phase();
  return AngleMatrix(std::move(theta), std::move(phi));
}

DenseMatrix random_full_rank(std::size_t rows, std::size_t cols, Rng& rng,
                             const ToleranceConfig& tol, std::size_t max_attempts) {
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    DenseMatrix a = random_complex_matrix(rows, cols, rng);
    try {
      if (condition_proxy(a, tol) <= tol.condition_cap) return a;
    } catch (const NumericalError&) {
      // rank deficient draw; try again
    }
  }
  throw InvalidArgument("random_full_rank: no " + std::to_string(rows) + " x " +
                        std::to_string(cols) + " matrix under condition cap after " +
                        std::to_string(max_attempts) + " attempts");
}

}  // namespace hadinv
