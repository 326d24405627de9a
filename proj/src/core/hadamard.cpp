#include "hadinv/core/hadamard.hpp"

#include <cstdlib>
#include <string>

#include "hadinv/core/errors.hpp"
#include "hadinv/core/kernels.hpp"

namespace hadinv {

namespace {

void require_nonzero_entries(const DenseMatrix& a, const ToleranceConfig& tol, const char* op) {
  tol.validate();
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (std::abs(a(r, c)) <= tol.entry_eps) {
        throw ZeroEntryError(r, c,
                             std::string(op) + ": zero entry at (" + std::to_string(r) + ", " +
                                 std::to_string(c) + ")");
      }
    }
  }
}

Complex int_power(Complex z, unsigned k) noexcept {
  Complex result{1.0, 0.0};
  while (k != 0) {
    if (k & 1u) result *= z;
    z *= z;
    k >>= 1u;
  }
  return result;
}

}  // namespace

DenseMatrix hadamard_product(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_shape(a, b, "hadamard_product");
  DenseMatrix out(a.rows(), a.cols());
  kernels::active().multiply(a.data().data(), b.data().data(), out.data().data(), a.size());
  return out;
}

DenseMatrix hadamard_power(const DenseMatrix& a, int k, const ToleranceConfig& tol) {
  if (k == 0) return all_ones(a.rows(), a.cols());
  if (k < 0) require_nonzero_entries(a, tol, "hadamard_power");
  const unsigned mag = static_cast<unsigned>(k < 0 ? -static_cast<long long>(k) : k);
  DenseMatrix out = a;
  for (Complex& z : out.data()) {
    z = int_power(z, mag);
    if (k < 0) z = 1.0 / z;
  }
  return out;
}

DenseMatrix hadamard_inverse(const DenseMatrix& a, const ToleranceConfig& tol) {
  require_nonzero_entries(a, tol, "hadamard_inverse");
  DenseMatrix out = a;
  for (Complex& z : out.data()) z = 1.0 / z;
  return out;
}

}  // namespace hadinv
