// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.

#include <immintrin.h>

#include "kernels/variants.hpp"

namespace hadinv::kernels::detail {

namespace {

// Two complex numbers per register: [re0, im0, re1, im1].
inline __m256d cmul(__m256d a, __m256d b) noexcept {
  const __m256d b_re = _mm256_movedup_pd(b);         // [br0, br0, br1, br1]
  const __m256d b_im = _mm256_permute_pd(b, 0xF);    // [bi0, bi0, bi1, bi1]
  const __m256d a_swap = _mm256_permute_pd(a, 0x5);  // [ai0, ar0, ai1, ar1]
  // even lanes: ar*br - ai*bi, odd lanes: ai*br + ar*bi
  return _mm256_fmaddsub_pd(a, b_re, _mm256_mul_pd(a_swap, b_im));
}

inline Complex cmul1(Complex a, Complex b) noexcept {
  return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

inline const double* dp(const Complex* p) noexcept { return reinterpret_cast<const double*>(p); }
inline double* dp(Complex* p) noexcept { return reinterpret_cast<double*>(p); }

void multiply(const Complex* a, const Complex* b, Complex* out, std::size_t count) {
  std::size_t k = 0;
  for (; k + 2 <= count; k += 2) {
    const __m256d va = _mm256_loadu_pd(dp(a + k));
    const __m256d vb = _mm256_loadu_pd(dp(b + k));
    _mm256_storeu_pd(dp(out + k), cmul(va, vb));
  }
  for (; k < count; ++k) out[k] = cmul1(a[k], b[k]);
}

void axpy(Complex alpha, const Complex* x, Complex* y, std::size_t count) {
  const __m256d al_re = _mm256_set1_pd(alpha.real());
  const __m256d al_im = _mm256_set1_pd(alpha.imag());
  std::size_t k = 0;
  for (; k + 4 <= count; k += 4) {
    const __m256d x0 = _mm256_loadu_pd(dp(x + k));
    const __m256d x1 = _mm256_loadu_pd(dp(x + k + 2));
    const __m256d s0 = _mm256_mul_pd(_mm256_permute_pd(x0, 0x5), al_im);
    const __m256d s1 = _mm256_mul_pd(_mm256_permute_pd(x1, 0x5), al_im);
    const __m256d p0 = _mm256_fmaddsub_pd(x0, al_re, s0);
    const __m256d p1 = _mm256_fmaddsub_pd(x1, al_re, s1);
    _mm256_storeu_pd(dp(y + k), _mm256_add_pd(_mm256_loadu_pd(dp(y + k)), p0));
    _mm256_storeu_pd(dp(y + k + 2), _mm256_add_pd(_mm256_loadu_pd(dp(y + k + 2)), p1));
  }
  for (; k + 2 <= count; k += 2) {
    const __m256d x0 = _mm256_loadu_pd(dp(x + k));
    const __m256d p0 =
        _mm256_fmaddsub_pd(x0, al_re, _mm256_mul_pd(_mm256_permute_pd(x0, 0x5), al_im));
    _mm256_storeu_pd(dp(y + k), _mm256_add_pd(_mm256_loadu_pd(dp(y + k)), p0));
  }
  for (; k < count; ++k) y[k] += cmul1(alpha, x[k]);
}

void mask_row(const Complex* base, const Complex* col_phase, Complex row_phase, Complex* out,
              std::size_t count) {
  const __m256d rp = _mm256_setr_pd(row_phase.real(), row_phase.imag(), row_phase.real(),
                                    row_phase.imag());
  std::size_t k = 0;
  for (; k + 2 <= count; k += 2) {
    const __m256d vb = _mm256_loadu_pd(dp(base + k));
    const __m256d vc = _mm256_loadu_pd(dp(col_phase + k));
    _mm256_storeu_pd(dp(out + k), cmul(cmul(vb, vc), rp));
  }
  for (; k < count; ++k) out[k] = cmul1(cmul1(base[k], col_phase[k]), row_phase);
}

}  // namespace

const KernelTable kAvx2Table{Isa::avx2, &multiply, &axpy, &mask_row};

}  // namespace hadinv::kernels::detail
