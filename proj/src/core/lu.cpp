#include "hadinv/core/lu.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <utility>

#include "hadinv/core/errors.hpp"
#include "hadinv/core/kernels.hpp"

namespace hadinv {

namespace {

thread_local std::size_t t_factorizations = 0;

std::string format_pivot(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

}  // namespace

std::size_t lu_factorization_count() noexcept { return t_factorizations; }

LuFactorization lu_factorize(const DenseMatrix& a, const ToleranceConfig& tol) {
  tol.validate();
  return lu_factorize_with_threshold(a, tol.rank_eps * frobenius_norm(a));
}

LuFactorization lu_factorize_with_threshold(const DenseMatrix& a, double pivot_threshold) {
  if (!a.is_square()) {
    throw DimensionError("lu_factorize: matrix must be square, got " + a.shape_string());
  }
  ++t_factorizations;
  const std::size_t n = a.rows();
  const auto& kern = kernels::active();

  LuFactorization lu(a);
  lu.pivot_threshold_ = pivot_threshold;
  lu.perm_.resize(n);
  for (std::size_t i = 0; i < n; ++i) lu.perm_[i] = i;
  lu.min_pivot_ = std::numeric_limits<double>::infinity();

  DenseMatrix& m = lu.packed_;
  for (std::size_t k = 0; k < n; ++k) {
    // largest modulus in column k; strict > keeps the lowest row on ties
    std::size_t p = k;
    double best = std::abs(m(k, k));
    for (std::size_t r = k + 1; r < n; ++r) {
      const double v = std::abs(m(r, k));
      if (v > best) {
        best = v;
        p = r;
      }
    }
    if (p != k) {
      auto rk = m.row(k);
      auto rp = m.row(p);
      for (std::size_t c = 0; c < n; ++c) std::swap(rk[c], rp[c]);
      std::swap(lu.perm_[k], lu.perm_[p]);
      lu.parity_ = -lu.parity_;
    }
    lu.min_pivot_ = std::min(lu.min_pivot_, best);
    if (best == 0.0) continue;

    const Complex pivot = m(k, k);
    const std::size_t tail = n - k - 1;
    for (std::size_t r = k + 1; r < n; ++r) {
      const Complex l = m(r, k) / pivot;
      m(r, k) = l;
      if (l != Complex{} && tail != 0) kern.axpy(-l, &m(k, k + 1), &m(r, k + 1), tail);
    }
  }
  return lu;
}

Complex LuFactorization::det() const noexcept {
  Complex d{static_cast<double>(parity_), 0.0};
  for (std::size_t i = 0; i < order(); ++i) d *= packed_(i, i);
  return d;
}

void LuFactorization::require_nonsingular() const {
  if (is_singular()) {
    throw SingularMatrixError("matrix is singular: pivot modulus " + format_pivot(min_pivot_) +
                                  " <= threshold " + format_pivot(pivot_threshold_),
                              min_pivot_);
  }
}

DenseMatrix LuFactorization::solve(const DenseMatrix& b) const {
  if (b.rows() != order()) {
    throw DimensionError("LU solve: right-hand side has " + std::to_string(b.rows()) +
                         " rows, expected " + std::to_string(order()));
  }
  require_nonsingular();
  const std::size_t n = order();
  const std::size_t w = b.cols();
  const auto& kern = kernels::active();

  // all right-hand sides at once, one row-axpy per eliminated entry
  DenseMatrix x(n, w);
  for (std::size_t i = 0; i < n; ++i) {
    auto src = b.row(perm_[i]);
    auto dst = x.row(i);
    for (std::size_t c = 0; c < w; ++c) dst[c] = src[c];
  }
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t k = 0; k < i; ++k) {
      const Complex l = packed_(i, k);
      if (l != Complex{}) kern.axpy(-l, x.row(k).data(), x.row(i).data(), w);
    }
  }
  for (std::size_t ii = n; ii-- > 0;) {
    for (std::size_t k = ii + 1; k < n; ++k) {
      const Complex u = packed_(ii, k);
      if (u != Complex{}) kern.axpy(-u, x.row(k).data(), x.row(ii).data(), w);
    }
    const Complex inv_pivot = 1.0 / packed_(ii, ii);
    for (Complex& z : x.row(ii)) z *= inv_pivot;
  }
  return x;
}

DenseMatrix LuFactorization::inverse() const { return solve(identity(order())); }

DenseMatrix LuFactorization::lower() const {
  const std::size_t n = order();
  DenseMatrix l = identity(n);
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t k = 0; k < i; ++k) l(i, k) = packed_(i, k);
  }
  return l;
}

DenseMatrix LuFactorization::upper() const {
  const std::size_t n = order();
  DenseMatrix u(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i; k < n; ++k) u(i, k) = packed_(i, k);
  }
  return u;
}

DenseMatrix inverse_lu(const DenseMatrix& a, const ToleranceConfig& tol) {
  return lu_factorize(a, tol).inverse();
}

Complex det_lu(const DenseMatrix& a, const ToleranceConfig& tol) {
  return lu_factorize(a, tol).det();
}

}  // namespace hadinv
