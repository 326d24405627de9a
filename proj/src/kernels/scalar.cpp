#include "kernels/variants.hpp"

namespace hadinv::kernels::detail {

namespace {

// Written out by hand: std::complex operator* takes a slow NaN-recovery path.
inline Complex mul(Complex a, Complex b) noexcept {
  return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

void multiply(const Complex* a, const Complex* b, Complex* out, std::size_t count) {
  for (std::size_t k = 0; k < count; ++k) out[k] = mul(a[k], b[k]);
}

void axpy(Complex alpha, const Complex* x, Complex* y, std::size_t count) {
  for (std::size_t k = 0; k < count; ++k) y[k] += mul(alpha, x[k]);
}

void mask_row(const Complex* base, const Complex* col_phase, Complex row_phase, Complex* out,
              std::size_t count) {
  for (std::size_t k = 0; k < count; ++k) out[k] = mul(mul(base[k], col_phase[k]), row_phase);
}

}  // namespace

const KernelTable kScalarTable{Isa::scalar, &multiply, &axpy, &mask_row};

}  // namespace hadinv::kernels::detail
