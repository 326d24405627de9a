#include "hadinv/structured_inverse.hpp"

#include <cmath>
#include <string>

#include "hadinv/core/errors.hpp"
#include "hadinv/core/hadamard.hpp"
#include "hadinv/core/lu.hpp"

namespace hadinv {

namespace {

void require_square_pair(const DenseMatrix& a, const AngleMatrix& t, const char* op) {
  if (!a.is_square() || !t.is_square() || a.rows() != t.rows()) {
    throw DimensionError(std::string(op) + ": need square A and Theta of equal order, got A " +
                         a.shape_string() + " and Theta " + std::to_string(t.rows()) + " x " +
                         std::to_string(t.cols()));
  }
}

}  // namespace

Minor::Minor(const DenseMatrix& source, std::size_t deleted_row, std::size_t deleted_col)
    : source_(source), row_(deleted_row), col_(deleted_col) {
  if (!source.is_square() || source.rows() < 2) {
    throw InvalidArgument("minor: source must be square of order >= 2, got " +
                          source.shape_string());
  }
  if (deleted_row >= source.rows() || deleted_col >= source.cols()) {
    throw InvalidArgument("minor: index (" + std::to_string(deleted_row) + ", " +
                          std::to_string(deleted_col) + ") out of range for " +
                          source.shape_string());
  }
}

DenseMatrix Minor::matrix() const {
  const DenseMatrix& a = source_.get();
  const std::size_t n = a.rows();
  DenseMatrix out(n - 1, n - 1);
  for (std::size_t r = 0, ro = 0; r < n; ++r) {
    if (r == row_) continue;
    for (std::size_t c = 0, co = 0; c < n; ++c) {
      if (c == col_) continue;
      out(ro, co++) = a(r, c);
    }
    ++ro;
  }
  return out;
}

Complex det_structured(const DenseMatrix& a, const AngleMatrix& t, const ToleranceConfig& tol) {
  require_square_pair(a, t, "det_structured");
  return det_lu(a, tol) * std::polar(1.0, phase_sum(t));
}

DenseMatrix inverse_structured(const DenseMatrix& a, const AngleMatrix& t,
                               const ToleranceConfig& tol) {
  require_square_pair(a, t, "inverse_structured");
  return hadamard_product(inverse_lu(a, tol), materialize(t.hermitian()));
}

DenseMatrix inverse_structured_transposed(const DenseMatrix& a, const AngleMatrix& t,
                                          const ToleranceConfig& tol) {
  require_square_pair(a, t, "inverse_structured_transposed");
  return hadamard_product(inverse_lu(a, tol), materialize(t.conjugated()));
}

Complex cofactor(const DenseMatrix& a, std::size_t i, std::size_t j) {
  if (!a.is_square()) throw DimensionError("cofactor: matrix must be square, got " + a.shape_string());
  if (i >= a.rows() || j >= a.cols()) {
    throw InvalidArgument("cofactor: index (" + std::to_string(i) + ", " + std::to_string(j) +
                          ") out of range for " + a.shape_string());
  }
  if (a.rows() == 1) return 1.0;
  // minor of a_ji, so the cofactor grid is the adjugate itself
  const Complex d = det_lu(Minor(a, j, i).matrix());
  return ((i + j) % 2 == 0) ? d : -d;
}

DenseMatrix inverse_adjugate_structured(const DenseMatrix& a, const AngleMatrix& t,
                                        const ToleranceConfig& tol, std::size_t adjugate_cap) {
  require_square_pair(a, t, "inverse_adjugate_structured");
  const std::size_t n = a.rows();
  if (n > adjugate_cap) {
    throw InvalidArgument("inverse_adjugate_structured: order " + std::to_string(n) +
                          " exceeds adjugate cap " + std::to_string(adjugate_cap));
  }
  const LuFactorization lu = lu_factorize(a, tol);
  if (lu.is_singular()) {
    throw SingularMatrixError("inverse_adjugate_structured: matrix is singular", lu.min_pivot());
  }
  const Complex det = lu.det();
  DenseMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double phase = -(t.theta()[j] + t.phi()[i]);
      out(i, j) = cofactor(a, i, j) / det * Complex(std::cos(phase), std::sin(phase));
    }
  }
  return out;
}

}  // namespace hadinv
