#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hadinv/core/matrix.hpp"
#include "hadinv/report.hpp"

namespace hadinv {

/// v = (e^{j theta_i}). Phases are finite radians, not normalized.
class AngleVector {
 public:
  explicit AngleVector(std::vector<double> phases);

  std::size_t size() const noexcept { return phases_.size(); }
  const std::vector<double>& phases() const noexcept { return phases_; }

  /// (cos theta_i, sin theta_i).
  std::vector<Complex> materialize() const;

 private:
  std::vector<double> phases_;
};

/// Rank-one angle matrix Theta = v u^T with entries e^{j(theta_i + phi_k)}.
///
/// Stored as its two phase lists; Theta^H, Theta^T and Theta^* are phase
/// negations/swaps. Two angle matrices are the same object when their
/// materializations agree, since phases are only defined modulo 2 pi.
class AngleMatrix {
 public:
  AngleMatrix(std::vector<double> theta, std::vector<double> phi);

  std::size_t rows() const noexcept { return theta_.size(); }
  std::size_t cols() const noexcept { return phi_.size(); }
  bool is_square() const noexcept { return rows() == cols(); }

  const std::vector<double>& theta() const noexcept { return theta_; }
  const std::vector<double>& phi() const noexcept { return phi_; }

  /// Entry (i, k) as (cos, sin) of theta_i + phi_k.
  Complex entry(std::size_t i, std::size_t k) const noexcept;

  /// theta' = -phi, phi' = -theta.
  AngleMatrix hermitian() const;
  /// theta' = phi, phi' = theta.
  AngleMatrix transposed() const;
  /// theta' = -theta, phi' = -phi.
  AngleMatrix conjugated() const;

 private:
  std::vector<double> theta_;
  std::vector<double> phi_;
};

AngleMatrix angle_matrix_from_vectors(const AngleVector& v, const AngleVector& u);

DenseMatrix materialize(const AngleMatrix& t);

inline AngleMatrix hermitian(const AngleMatrix& t) { return t.hermitian(); }

/// Theta^{o(-T)} computed the long way: transpose of the entrywise reciprocal
/// of the materialization. Equals materialize(hermitian(t)) up to rounding.
DenseMatrix hadamard_inverse_transpose(const AngleMatrix& t);

enum class GramSide { left, right };

struct AngleGram {
  std::size_t scale;
  AngleMatrix g;
};

/// left:  Theta^H Theta = m * G, G = angle(-phi, phi) (n x n).
/// right: Theta Theta^H = n * G, G = angle(theta, -theta) (m x m).
AngleGram gram(const AngleMatrix& t, GramSide side);

/// Dense Theta^H Theta Theta^H against m n Theta^H; passes iff the max entry
/// deviation is <= m n entry_eps.
VerificationReport triple_product_check(const AngleMatrix& t, const ToleranceConfig& tol = {});

/// sum theta_i + sum phi_i. Throws DimensionError unless square.
double phase_sum(const AngleMatrix& t);

}  // namespace hadinv
