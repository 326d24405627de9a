#pragma once

#include <cstddef>

#include "hadinv/angle.hpp"
#include "hadinv/core/matrix.hpp"

namespace hadinv {

/// Residuals of the four Penrose conditions for a candidate X ~ A^+.
struct PenroseReport {
  double r1 = 0.0;  ///< ||A X A - A||_F
  double r2 = 0.0;  ///< ||X A X - X||_F
  double r3 = 0.0;  ///< ||(A X)^H - A X||_F
  double r4 = 0.0;  ///< ||(X A)^H - X A||_F
  double tolerance = 0.0;
  bool pass = false;
};

/// Moore-Penrose inverse of a full-rank matrix.
///   m > n: (A^H A)^-1 A^H
///   m < n: A^H (A A^H)^-1
///   m = n: A^-1
/// The Gram matrix is LU-factorized with pivot threshold rank_eps ||A||_F^2;
/// failure raises RankDeficientError (SingularMatrixError when square).
DenseMatrix pinv_full_rank(const DenseMatrix& a, const ToleranceConfig& tol = {});

/// pass iff all residuals <= residual_eps (1 + ||A||_F).
PenroseReport penrose_check(const DenseMatrix& a, const DenseMatrix& x,
                            const ToleranceConfig& tol = {});

struct GramHadamardFactors {
  DenseMatrix gram_a;   ///< A^H A
  std::size_t scale;    ///< m
  AngleMatrix gram_t;   ///< (1/m) Theta^H Theta as an angle matrix
};

/// (A o Theta)^H (A o Theta) = (A^H A) o materialize(gram_t).
GramHadamardFactors gram_hadamard_factorization(const DenseMatrix& a, const AngleMatrix& t);

/// (A o Theta)^+ = A^+ o Theta^H. Never forms (A o Theta)^H (A o Theta).
DenseMatrix pinv_structured(const DenseMatrix& a, const AngleMatrix& t,
                            const ToleranceConfig& tol = {});

/// ||A||_F ||A^+||_F (||A^-1||_F when square). Throws on rank deficiency.
double condition_proxy(const DenseMatrix& a, const ToleranceConfig& tol = {});

}  // namespace hadinv
