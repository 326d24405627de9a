#include "hadinv/core/matrix.hpp"

#include <cmath>
#include <string>

#include "hadinv/core/errors.hpp"
#include "hadinv/core/kernels.hpp"

namespace hadinv {

namespace {

void require_positive_dims(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) {
    throw InvalidArgument("matrix dimensions must be positive, got " + std::to_string(rows) +
                          " x " + std::to_string(cols));
  }
}

bool finite(Complex z) noexcept { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

void ToleranceConfig::validate() const {
  auto check = [](double v, const char* name) {
    if (!std::isfinite(v) || v <= 0.0) {
      throw InvalidArgument(std::string("tolerance ") + name + " must be finite and positive");
    }
  };
  check(entry_eps, "entry_eps");
  check(residual_eps, "residual_eps");
  check(rank_eps, "rank_eps");
  check(condition_cap, "condition_cap");
}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_() {
  require_positive_dims(rows, cols);
  data_.assign(rows * cols, Complex{});
}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  require_positive_dims(rows, cols);
  if (data_.size() != rows * cols) {
    throw DimensionError("matrix data has " + std::to_string(data_.size()) +
                         " entries, expected " + std::to_string(rows * cols) + " for " +
                         shape_string());
  }
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!finite(data_[i])) {
      throw InvalidArgument("non-finite matrix entry at (" + std::to_string(i / cols) + ", " +
                            std::to_string(i % cols) + ")");
    }
  }
}

DenseMatrix::DenseMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  require_positive_dims(rows_, cols_);
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    for (Complex z : r) {
      if (!finite(z)) throw InvalidArgument("non-finite matrix entry");
      data_.push_back(z);
    }
  }
}

Complex DenseMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) {
    throw InvalidArgument("index (" + std::to_string(r) + ", " + std::to_string(c) +
                          ") out of range for " + shape_string());
  }
  return (*this)(r, c);
}

std::string DenseMatrix::shape_string() const {
  return std::to_string(rows_) + " x " + std::to_string(cols_);
}

void require_same_shape(const DenseMatrix& a, const DenseMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(op) + ": shape mismatch " + a.shape_string() + " vs " +
                         b.shape_string());
  }
}

DenseMatrix identity(std::size_t n) {
  DenseMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1.0;
  return out;
}

DenseMatrix all_ones(std::size_t rows, std::size_t cols) {
  return DenseMatrix(rows, cols, std::vector<Complex>(rows * cols, Complex{1.0, 0.0}));
}

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("matmul: inner dimensions differ, " + a.shape_string() + " times " +
                         b.shape_string());
  }
  const auto& k = kernels::active();
  DenseMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Complex* out_row = out.row(i).data();
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const Complex s = a(i, l);
      if (s == Complex{}) continue;
      k.axpy(s, b.row(l).data(), out_row, b.cols());
    }
  }
  return out;
}

DenseMatrix conjugate(const DenseMatrix& a) {
  DenseMatrix out = a;
  for (Complex& z : out.data()) z = std::conj(z);
  return out;
}

DenseMatrix transpose(const DenseMatrix& a) {
  DenseMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) out(k, i) = a(i, k);
  }
  return out;
}

DenseMatrix conjugate_transpose(const DenseMatrix& a) { return conjugate(transpose(a)); }

double frobenius_norm(const DenseMatrix& a) {
  // scaled sum of squares, as in LAPACK's zlassq, so huge or tiny entries do not overflow
  double scale = 0.0;
  double ssq = 1.0;
  for (Complex z : a.data()) {
    for (double part : {z.real(), z.imag()}) {
      if (part == 0.0) continue;
      const double ab = std::abs(part);
      if (scale < ab) {
        ssq = 1.0 + ssq * (scale / ab) * (scale / ab);
        scale = ab;
      } else {
        ssq += (ab / scale) * (ab / scale);
      }
    }
  }
  return scale * std::sqrt(ssq);
}

DenseMatrix add(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_shape(a, b, "add");
  DenseMatrix out = a;
  auto o = out.data();
  auto bd = b.data();
  for (std::size_t i = 0; i < o.size(); ++i) o[i] += bd[i];
  return out;
}

DenseMatrix subtract(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_shape(a, b, "subtract");
  DenseMatrix out = a;
  auto o = out.data();
  auto bd = b.data();
  for (std::size_t i = 0; i < o.size(); ++i) o[i] -= bd[i];
  return out;
}

DenseMatrix scale(const DenseMatrix& a, Complex s) {
  DenseMatrix out = a;
  for (Complex& z : out.data()) z *= s;
  return out;
}

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double worst = 0.0;
  auto ad = a.data();
  auto bd = b.data();
  for (std::size_t i = 0; i < ad.size(); ++i) {
    const double d = std::abs(ad[i] - bd[i]);
    if (!(d <= worst)) worst = d;  // lets NaN through
  }
  return worst;
}

double frobenius_diff(const DenseMatrix& a, const DenseMatrix& b) {
  return frobenius_norm(subtract(a, b));
}

}  // namespace hadinv
