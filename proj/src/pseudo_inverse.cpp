#include "hadinv/pseudo_inverse.hpp"

#include <string>

#include "hadinv/core/errors.hpp"
#include "hadinv/core/hadamard.hpp"
#include "hadinv/core/lu.hpp"

namespace hadinv {

DenseMatrix pinv_full_rank(const DenseMatrix& a, const ToleranceConfig& tol) {
  tol.validate();
  if (a.is_square()) return inverse_lu(a, tol);

  const DenseMatrix a_h = conjugate_transpose(a);
  const bool tall = a.rows() > a.cols();
  const DenseMatrix g = tall ? matmul(a_h, a) : matmul(a, a_h);
  const double norm = frobenius_norm(a);
  const LuFactorization lu = lu_factorize_with_threshold(g, tol.rank_eps * norm * norm);
  if (lu.is_singular()) {
    throw RankDeficientError("pinv_full_rank: " + a.shape_string() +
                                 " matrix is rank deficient (Gram pivot " +
                                 std::to_string(lu.min_pivot()) + ")",
                             lu.min_pivot());
  }
  if (tall) return lu.solve(a_h);  // (A^H A)^-1 A^H
  // A^H (A A^H)^-1 = ((A A^H)^-1 A)^H, since A A^H is Hermitian
  return conjugate_transpose(lu.solve(a));
}

PenroseReport penrose_check(const DenseMatrix& a, const DenseMatrix& x,
                            const ToleranceConfig& tol) {
  tol.validate();
  if (x.rows() != a.cols() || x.cols() != a.rows()) {
    throw DimensionError("penrose_check: X is " + x.shape_string() + ", expected " +
                         std::to_string(a.cols()) + " x " + std::to_string(a.rows()));
  }
  const DenseMatrix ax = matmul(a, x);
  const DenseMatrix xa = matmul(x, a);
  PenroseReport r;
  r.r1 = frobenius_diff(matmul(ax, a), a);
  r.r2 = frobenius_diff(matmul(x, ax), x);
  r.r3 = frobenius_diff(conjugate_transpose(ax), ax);
  r.r4 = frobenius_diff(conjugate_transpose(xa), xa);
  r.tolerance = tol.residual_eps * (1.0 + frobenius_norm(a));
  r.pass = r.r1 <= r.tolerance && r.r2 <= r.tolerance && r.r3 <= r.tolerance &&
           r.r4 <= r.tolerance;
  return r;
}

GramHadamardFactors gram_hadamard_factorization(const DenseMatrix& a, const AngleMatrix& t) {
  if (a.rows() != t.rows() || a.cols() != t.cols()) {
    throw DimensionError("gram_hadamard_factorization: A is " + a.shape_string() +
                         ", Theta is " + std::to_string(t.rows()) + " x " +
                         std::to_string(t.cols()));
  }
  AngleGram g = gram(t, GramSide::left);
  return {matmul(conjugate_transpose(a), a), g.scale, std::move(g.g)};
}

DenseMatrix pinv_structured(const DenseMatrix& a, const AngleMatrix& t,
                            const ToleranceConfig& tol) {
  if (a.rows() != t.rows() || a.cols() != t.cols()) {
    throw DimensionError("pinv_structured: A is " + a.shape_string() + ", Theta is " +
                         std::to_string(t.rows()) + " x " + std::to_string(t.cols()));
  }
  return hadamard_product(pinv_full_rank(a, tol), materialize(t.hermitian()));
}

double condition_proxy(const DenseMatrix& a, const ToleranceConfig& tol) {
  return frobenius_norm(a) * frobenius_norm(pinv_full_rank(a, tol));
}

}  // namespace hadinv
