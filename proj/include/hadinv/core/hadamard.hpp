#pragma once

#include "hadinv/core/matrix.hpp"

namespace hadinv {

/// Entrywise product. Throws DimensionError on shape mismatch.
DenseMatrix hadamard_product(const DenseMatrix& a, const DenseMatrix& b);

/// Entrywise integer power a_ik^k by repeated squaring.
///
/// k = 0 yields all-ones without looking at the entries (0^0 = 1). For k < 0
/// every entry must satisfy |a_ik| > tol.entry_eps; otherwise ZeroEntryError
/// reports the first offending index in row-major order.
DenseMatrix hadamard_power(const DenseMatrix& a, int k, const ToleranceConfig& tol = {});

/// Entrywise reciprocal; same zero test as hadamard_power with k < 0.
DenseMatrix hadamard_inverse(const DenseMatrix& a, const ToleranceConfig& tol = {});

}  // namespace hadinv
