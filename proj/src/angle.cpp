#include "hadinv/angle.hpp"

#include <cmath>
#include <string>

#include "hadinv/core/errors.hpp"
#include "hadinv/core/hadamard.hpp"

namespace hadinv {

namespace {

void require_finite_phases(const std::vector<double>& phases, const char* what) {
  if (phases.empty()) throw InvalidArgument(std::string(what) + " must not be empty");
  for (std::size_t i = 0; i < phases.size(); ++i) {
    if (!std::isfinite(phases[i])) {
      throw InvalidArgument(std::string(what) + "[" + std::to_string(i) + "] is not finite");
    }
  }
}

std::vector<double> negated(const std::vector<double>& v) {
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

inline Complex unit(double phase) noexcept { return {std::cos(phase), std::sin(phase)}; }

}  // namespace

AngleVector::AngleVector(std::vector<double> phases) : phases_(std::move(phases)) {
  require_finite_phases(phases_, "angle vector phases");
}

std::vector<Complex> AngleVector::materialize() const {
  std::vector<Complex> out(phases_.size());
  for (std::size_t i = 0; i < phases_.size(); ++i) out[i] = unit(phases_[i]);
  return out;
}

AngleMatrix::AngleMatrix(std::vector<double> theta, std::vector<double> phi)
    : theta_(std::move(theta)), phi_(std::move(phi)) {
  require_finite_phases(theta_, "theta");
  require_finite_phases(phi_, "phi");
}

Complex AngleMatrix::entry(std::size_t i, std::size_t k) const noexcept {
  return unit(theta_[i] + phi_[k]);
}

AngleMatrix AngleMatrix::hermitian() const { return AngleMatrix(negated(phi_), negated(theta_)); }

AngleMatrix AngleMatrix::transposed() const { return AngleMatrix(phi_, theta_); }

AngleMatrix AngleMatrix::conjugated() const {
  return AngleMatrix(negated(theta_), negated(phi_));
}

AngleMatrix angle_matrix_from_vectors(const AngleVector& v, const AngleVector& u) {
  return AngleMatrix(v.phases(), u.phases());
}

DenseMatrix materialize(const AngleMatrix& t) {
  DenseMatrix out(t.rows(), t.cols());
  for (std::size_t i = 0; i < t.rows(); ++i) {
    for (std::size_t k = 0; k < t.cols(); ++k) out(i, k) = t.entry(i, k);
  }
  return out;
}

DenseMatrix hadamard_inverse_transpose(const AngleMatrix& t) {
  return transpose(hadamard_inverse(materialize(t)));
}

AngleGram gram(const AngleMatrix& t, GramSide side) {
  if (side == GramSide::left) {
    // (Theta^H Theta)_ik = sum_l e^{-j(theta_l + phi_i)} e^{j(theta_l + phi_k)} = m e^{j(phi_k - phi_i)}
    return {t.rows(), AngleMatrix(negated(t.phi()), t.phi())};
  }
  // (Theta Theta^H)_ik = n e^{j(theta_i - theta_k)}
  return {t.cols(), AngleMatrix(t.theta(), negated(t.theta()))};
}

VerificationReport triple_product_check(const AngleMatrix& t, const ToleranceConfig& tol) {
  tol.validate();
  const DenseMatrix theta = materialize(t);
  const DenseMatrix theta_h = materialize(t.hermitian());
  const DenseMatrix triple = matmul(matmul(theta_h, theta), theta_h);
  const double mn = static_cast<double>(t.rows() * t.cols());
  VerificationReport report;
  report.record("triple_product", max_abs_diff(triple, scale(theta_h, mn)), mn * tol.entry_eps);
  return report;
}

double phase_sum(const AngleMatrix& t) {
  if (!t.is_square()) {
    throw DimensionError("phase_sum: angle matrix must be square, got " +
                         std::to_string(t.rows()) + " x " + std::to_string(t.cols()));
  }
  double sum = 0.0;
  for (double v : t.theta()) sum += v;
  for (double v : t.phi()) sum += v;
  return sum;
}

}  // namespace hadinv
