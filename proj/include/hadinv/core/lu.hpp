#pragma once

#include <cstddef>
#include <vector>

#include "hadinv/core/matrix.hpp"

namespace hadinv {

/// P A = L U with partial pivoting on the largest modulus (ties go to the
/// lowest row). L is unit lower triangular; L and U share one packed matrix.
///
/// Factorization itself never fails: a zero column is skipped and leaves a
/// zero pivot. Singularity is decided when an inverse or solve is requested,
/// by |u_ii| <= pivot_threshold.
class LuFactorization {
 public:
  std::size_t order() const noexcept { return packed_.rows(); }

  /// parity * prod u_ii.
  Complex det() const noexcept;

  /// A^-1 from forward/back substitution against the permuted identity.
  /// Throws SingularMatrixError carrying the smallest pivot modulus.
  DenseMatrix inverse() const;

  /// Solves A X = B for X. Same singularity rule as inverse().
  DenseMatrix solve(const DenseMatrix& b) const;

  bool is_singular() const noexcept { return min_pivot_ <= pivot_threshold_; }
  double min_pivot() const noexcept { return min_pivot_; }
  double pivot_threshold() const noexcept { return pivot_threshold_; }
  int parity() const noexcept { return parity_; }
  /// perm[i] is the source row of A that ends up in row i of P A.
  const std::vector<std::size_t>& permutation() const noexcept { return perm_; }

  DenseMatrix lower() const;
  DenseMatrix upper() const;

 private:
  friend LuFactorization lu_factorize_with_threshold(const DenseMatrix&, double);

  explicit LuFactorization(DenseMatrix packed) : packed_(std::move(packed)) {}
  void require_nonsingular() const;

  DenseMatrix packed_;
  std::vector<std::size_t> perm_;
  int parity_ = 1;
  double min_pivot_ = 0.0;
  double pivot_threshold_ = 0.0;
};

/// Factorizes a square matrix with pivot threshold tol.rank_eps * ||A||_F.
/// Throws DimensionError on non-square input.
LuFactorization lu_factorize(const DenseMatrix& a, const ToleranceConfig& tol = {});

/// Same, with an explicit absolute pivot threshold.
LuFactorization lu_factorize_with_threshold(const DenseMatrix& a, double pivot_threshold);

/// Convenience: lu_factorize(a, tol).inverse().
DenseMatrix inverse_lu(const DenseMatrix& a, const ToleranceConfig& tol = {});
/// Convenience: lu_factorize(a, tol).det().
Complex det_lu(const DenseMatrix& a, const ToleranceConfig& tol = {});

/// Number of LU factorizations performed by the calling thread so far.
/// Used as an operation-count probe.
std::size_t lu_factorization_count() noexcept;

}  // namespace hadinv
