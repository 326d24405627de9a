#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace hadinv {

using Complex = std::complex<double>;

/// Numerical thresholds shared by every module.
struct ToleranceConfig {
  double entry_eps = 1e-12;      ///< |a| <= entry_eps counts as zero
  double residual_eps = 1e-8;    ///< Frobenius residual scale
  double rank_eps = 1e-10;       ///< LU pivot test, relative to ||A||_F
  double condition_cap = 1e6;    ///< upper bound on ||A||_F ||A^-1||_F for random instances

  /// Throws InvalidArgument unless every field is finite and strictly positive.
  void validate() const;
};

/// Dense m x n complex matrix, row-major. Entries are finite.
class DenseMatrix {
 public:
  /// rows x cols zero matrix; both dimensions must be positive.
  DenseMatrix(std::size_t rows, std::size_t cols);
  /// Takes ownership of row-major data; rejects size mismatch and non-finite values.
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> data);
  /// Nested row literal, e.g. {{1, 2}, {3, Complex(0, 1)}}.
  DenseMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
  Complex& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }

  /// Bounds-checked access.
  Complex at(std::size_t r, std::size_t c) const;

  std::span<const Complex> row(std::size_t r) const noexcept {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<Complex> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }

  std::span<const Complex> data() const noexcept { return data_; }
  std::span<Complex> data() noexcept { return data_; }

  /// "m x n".
  std::string shape_string() const;

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> data_;
};

DenseMatrix identity(std::size_t n);
DenseMatrix all_ones(std::size_t rows, std::size_t cols);

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix conjugate(const DenseMatrix& a);
DenseMatrix transpose(const DenseMatrix& a);
DenseMatrix conjugate_transpose(const DenseMatrix& a);
double frobenius_norm(const DenseMatrix& a);

DenseMatrix add(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix subtract(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix scale(const DenseMatrix& a, Complex s);

/// max_{i,k} |a_ik - b_ik|.
double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);
/// ||a - b||_F.
double frobenius_diff(const DenseMatrix& a, const DenseMatrix& b);

/// Throws DimensionError naming both shapes unless a and b have equal shape.
void require_same_shape(const DenseMatrix& a, const DenseMatrix& b, const char* op);

}  // namespace hadinv
