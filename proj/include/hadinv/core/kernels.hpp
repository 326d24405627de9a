#pragma once

// Complex inner-loop kernels with one scalar reference implementation and
// SIMD variants (AVX2+FMA on x86-64, NEON on AArch64). The variant is chosen
// once at first use from the running CPU; HADINV_SIMD=scalar forces the
// reference path. All buffers hold interleaved (re, im) doubles, i.e. the
// layout of std::complex<double> arrays.

#include <complex>
#include <cstddef>
#include <string_view>
#include <vector>

namespace hadinv::kernels {

using Complex = std::complex<double>;

enum class Isa { scalar, avx2, neon };

std::string_view isa_name(Isa isa) noexcept;

struct KernelTable {
  Isa isa;
  /// out[k] = a[k] * b[k]. `out` may alias `a` or `b`.
  void (*multiply)(const Complex* a, const Complex* b, Complex* out, std::size_t count);
  /// y[k] += alpha * x[k].
  void (*axpy)(Complex alpha, const Complex* x, Complex* y, std::size_t count);
  /// out[k] = base[k] * col_phase[k] * row_phase. Rank-one phase mask of one row.
  void (*mask_row)(const Complex* base, const Complex* col_phase, Complex row_phase,
                   Complex* out, std::size_t count);
};

const KernelTable& scalar_table() noexcept;

/// Variants compiled into this build and supported by the running CPU,
/// scalar first.
std::vector<Isa> available() noexcept;

/// Table for a given ISA. Throws InvalidArgument if the ISA is unavailable.
const KernelTable& table(Isa isa);

/// Table selected for this process.
const KernelTable& active() noexcept;

/// Replaces the process-wide selection (tests and benchmarks). Not thread-safe
/// with respect to concurrent kernel calls.
void select(Isa isa);

}  // namespace hadinv::kernels
