#pragma once

#include <cstddef>
#include <functional>

#include "hadinv/angle.hpp"
#include "hadinv/core/matrix.hpp"

namespace hadinv {

/// The (n-1) x (n-1) submatrix left after deleting one row and one column.
/// Holds a reference to `source`, which must outlive the Minor.
class Minor {
 public:
  /// Throws InvalidArgument on out-of-range indices or a non-square / 1x1 source.
  Minor(const DenseMatrix& source, std::size_t deleted_row, std::size_t deleted_col);

  std::size_t deleted_row() const noexcept { return row_; }
  std::size_t deleted_col() const noexcept { return col_; }
  DenseMatrix matrix() const;

 private:
  std::reference_wrapper<const DenseMatrix> source_;
  std::size_t row_;
  std::size_t col_;
};

/// |A o Theta| = |A| e^{j phase_sum(Theta)}.
Complex det_structured(const DenseMatrix& a, const AngleMatrix& t, const ToleranceConfig& tol = {});

/// (A o Theta)^-1 = A^-1 o Theta^H. One LU factorization of A; the masked
/// matrix is never factorized.
DenseMatrix inverse_structured(const DenseMatrix& a, const AngleMatrix& t,
                               const ToleranceConfig& tol = {});

/// (A o Theta^T)^-1 = A^-1 o Theta^*.
DenseMatrix inverse_structured_transposed(const DenseMatrix& a, const AngleMatrix& t,
                                          const ToleranceConfig& tol = {});

/// Cofactor with the adjugate-oriented index order: (-1)^{i+j} times the
/// determinant of A with row j and column i deleted. The grid of these
/// cofactors is adj(A) directly. A 1x1 matrix has cofactor 1.
Complex cofactor(const DenseMatrix& a, std::size_t i, std::size_t j);

inline constexpr std::size_t kDefaultAdjugateCap = 6;

/// Entry (i, j) = cofactor(A, i, j) / |A| * e^{-j(theta_j + phi_i)}.
/// Small-n oracle for inverse_structured: O(n^2) determinants of minors.
DenseMatrix inverse_adjugate_structured(const DenseMatrix& a, const AngleMatrix& t,
                                        const ToleranceConfig& tol = {},
                                        std::size_t adjugate_cap = kDefaultAdjugateCap);

}  // namespace hadinv
