// AArch64 Advanced SIMD variant; one complex double per register.

#include <arm_neon.h>

#include "kernels/variants.hpp"

namespace hadinv::kernels::detail {

namespace {

inline float64x2_t cmul(float64x2_t a, float64x2_t b) noexcept {
  const float64x2_t b_re = vdupq_laneq_f64(b, 0);
  const float64x2_t b_im = vdupq_laneq_f64(b, 1);
  const float64x2_t a_swap = vextq_f64(a, a, 1);  // [ai, ar]
  const float64x2_t sign = {-1.0, 1.0};
  // [ar*br - ai*bi, ai*br + ar*bi]
  return vfmaq_f64(vmulq_f64(a, b_re), a_swap, vmulq_f64(b_im, sign));
}

inline const double* dp(const Complex* p) noexcept { return reinterpret_cast<const double*>(p); }
inline double* dp(Complex* p) noexcept { return reinterpret_cast<double*>(p); }

void multiply(const Complex* a, const Complex* b, Complex* out, std::size_t count) {
  for (std::size_t k = 0; k < count; ++k)
    vst1q_f64(dp(out + k), cmul(vld1q_f64(dp(a + k)), vld1q_f64(dp(b + k))));
}

void axpy(Complex alpha, const Complex* x, Complex* y, std::size_t count) {
  const float64x2_t va = {alpha.real(), alpha.imag()};
  for (std::size_t k = 0; k < count; ++k)
    vst1q_f64(dp(y + k), vaddq_f64(vld1q_f64(dp(y + k)), cmul(va, vld1q_f64(dp(x + k)))));
}

void mask_row(const Complex* base, const Complex* col_phase, Complex row_phase, Complex* out,
              std::size_t count) {
  const float64x2_t rp = {row_phase.real(), row_phase.imag()};
  for (std::size_t k = 0; k < count; ++k)
    vst1q_f64(dp(out + k),
              cmul(cmul(vld1q_f64(dp(base + k)), vld1q_f64(dp(col_phase + k))), rp));
}

}  // namespace

const KernelTable kNeonTable{Isa::neon, &multiply, &axpy, &mask_row};

}  // namespace hadinv::kernels::detail
