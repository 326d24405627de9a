#include "hadinv/verify.hpp"

#include <cfloat>
#include <cmath>
#include <numbers>

#include "hadinv/angle.hpp"
#include "hadinv/core/errors.hpp"
#include "hadinv/core/hadamard.hpp"
#include "hadinv/core/lu.hpp"
#include "hadinv/pseudo_inverse.hpp"
#include "hadinv/random.hpp"
#include "hadinv/structured_inverse.hpp"

namespace hadinv::verify {

namespace {

// Tolerances of the property suites. These are fixed by the identities being
// checked, not by ToleranceConfig.
constexpr double kLemma1Tol = 1e-14;
constexpr double kRankOneTol = 1e-13;
constexpr double kLemma2RelTol = 1e-10;
constexpr double kGramTol = 1e-13;         // times the integer scale
constexpr double kGramDiagonalTol = 1e-15; // times m
constexpr double kTripleTol = 1e-13;       // times m n
constexpr double kInverseTol = 1e-8;       // times n
constexpr double kAdjugateTol = 1e-10;
constexpr double kGramHadamardTol = 1e-12; // times m n
constexpr double kSquareDegenerationTol = 1e-10;

enum SuiteTag : std::uint64_t {
  kTagLemma1 = 0x11,
  kTagLemma2 = 0x12,
  kTagLemma3 = 0x13,
  kTagTheorem1 = 0x21,
  kTagAdjugate = 0x22,
  kTagCorollary = 0x23,
  kTagTheorem2 = 0x31,
};

Rng trial_rng(const SuiteConfig& cfg, SuiteTag tag, std::size_t trial) {
  return Rng(counter_hash(cfg.seed, tag, trial));
}

double max_rank_one_minor(const DenseMatrix& z) {
  double worst = 0.0;
  for (std::size_t i = 0; i < z.rows(); ++i) {
    for (std::size_t j = i + 1; j < z.rows(); ++j) {
      for (std::size_t k = 0; k < z.cols(); ++k) {
        for (std::size_t l = k + 1; l < z.cols(); ++l) {
          worst = std::max(worst, std::abs(z(i, k) * z(j, l) - z(i, l) * z(j, k)));
        }
      }
    }
  }
  return worst;
}

double max_unimodular_error(const DenseMatrix& z) {
  double worst = 0.0;
  for (Complex v : z.data()) worst = std::max(worst, std::abs(std::abs(v) - 1.0));
  return worst;
}

void lemma3_instance(const AngleMatrix& t, VerificationReport& rep) {
  const double m = static_cast<double>(t.rows());
  const double n = static_cast<double>(t.cols());
  const DenseMatrix theta = materialize(t);
  const DenseMatrix theta_h = materialize(t.hermitian());

  const DenseMatrix left = matmul(theta_h, theta);
  const AngleGram gl = gram(t, GramSide::left);
  rep.record("lemma3.gram_left", max_abs_diff(left, scale(materialize(gl.g), m)), m * kGramTol);

  const DenseMatrix right = matmul(theta, theta_h);
  const AngleGram gr = gram(t, GramSide::right);
  rep.record("lemma3.gram_right", max_abs_diff(right, scale(materialize(gr.g), n)),
             n * kGramTol);

  double diag = 0.0;
  for (std::size_t i = 0; i < left.rows(); ++i) diag = std::max(diag, std::abs(left(i, i) - m));
  rep.record("lemma3.gram_diagonal", diag, m * kGramDiagonalTol);

  const DenseMatrix triple = matmul(left, theta_h);
  rep.record("lemma3.triple_product", max_abs_diff(triple, scale(theta_h, m * n)),
             m * n * kTripleTol);
}

}  // namespace

VerificationReport lemma1(const SuiteConfig& cfg) {
  cfg.tol.validate();
  VerificationReport rep;
  for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
    Rng rng = trial_rng(cfg, kTagLemma1, trial);
    const std::size_t m = rng.uniform_int(1, 16);
    const std::size_t n = rng.uniform_int(1, 16);
    const AngleMatrix t = random_angle_matrix(m, n, rng);
    const DenseMatrix z = materialize(t);
    rep.record("lemma1.inverse_transpose_is_hermitian",
               max_abs_diff(hadamard_inverse_transpose(t), materialize(t.hermitian())), kLemma1Tol);
    rep.record("lemma1.unimodular", max_unimodular_error(z), cfg.tol.entry_eps);
    rep.record("lemma1.rank_one", max_rank_one_minor(z), kRankOneTol);
    rep.record("lemma1.involution", max_abs_diff(materialize(t.hermitian().hermitian()), z),
               cfg.tol.entry_eps);
  }
  return rep;
}

VerificationReport lemma2(const SuiteConfig& cfg) {
  cfg.tol.validate();
  VerificationReport rep;
  for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
    Rng rng = trial_rng(cfg, kTagLemma2, trial);
    const std::size_t n = rng.uniform_int(1, 16);
    const DenseMatrix a = random_full_rank(n, n, rng, cfg.tol);
    const AngleMatrix t = random_angle_matrix(n, n, rng);
    const Complex structured = det_structured(a, t, cfg.tol);
    const Complex oracle = det_lu(hadamard_product(a, materialize(t)), cfg.tol);
    rep.record("lemma2.determinant", std::abs(structured - oracle),
               kLemma2RelTol * (1.0 + std::abs(det_lu(a, cfg.tol))));
  }
  return rep;
}

VerificationReport lemma3(const SuiteConfig& cfg) {
  cfg.tol.validate();
  VerificationReport rep;
  if (cfg.trials == 0) return rep;

  // fixed 2 x 2 instance: every entry of Theta^H Theta has modulus exactly 2
  const AngleMatrix fixed({0.0, std::numbers::pi / 2}, {0.0, std::numbers::pi});
  const DenseMatrix g = matmul(materialize(fixed.hermitian()), materialize(fixed));
  double worst = 0.0;
  for (Complex z : g.data()) worst = std::max(worst, std::abs(std::abs(z) - 2.0));
  rep.record("lemma3.two_by_two_modulus", worst, 8.0 * DBL_EPSILON);
  lemma3_instance(fixed, rep);

  for (std::size_t trial = 1; trial < cfg.trials; ++trial) {
    Rng rng = trial_rng(cfg, kTagLemma3, trial);
    const std::size_t m = rng.uniform_int(1, 64);
    const std::size_t n = rng.uniform_int(1, 64);
    lemma3_instance(random_angle_matrix(m, n, rng), rep);
  }
  return rep;
}

VerificationReport theorem1(const SuiteConfig& cfg) {
  cfg.tol.validate();
  VerificationReport rep;
  for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
    Rng rng = trial_rng(cfg, kTagTheorem1, trial);
    const std::size_t n = 1 + trial % 32;
    const DenseMatrix a = random_full_rank(n, n, rng, cfg.tol);
    const AngleMatrix t = random_angle_matrix(n, n, rng);
    const DenseMatrix b = hadamard_product(a, materialize(t));
    const double tol = kInverseTol * static_cast<double>(n);

    const std::size_t before = lu_factorization_count();
    const DenseMatrix x = inverse_structured(a, t, cfg.tol);
    rep.record_flag("thm1.single_factorization", lu_factorization_count() - before == 1);

    const DenseMatrix eye = identity(n);
    rep.record("thm1.left_residual", frobenius_diff(matmul(x, b), eye), tol);
    rep.record("thm1.right_residual", frobenius_diff(matmul(b, x), eye), tol);
    rep.record("thm1.lu_oracle", frobenius_diff(x, inverse_lu(b, cfg.tol)), tol);
  }
  return rep;
}

VerificationReport adjugate_oracle(const SuiteConfig& cfg) {
  cfg.tol.validate();
  VerificationReport rep;
  for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
    Rng rng = trial_rng(cfg, kTagAdjugate, trial);
    const std::size_t n = 1 + trial % 4;
    const DenseMatrix a = random_full_rank(n, n, rng, cfg.tol);
    const AngleMatrix t = random_angle_matrix(n, n, rng);
    rep.record("adjugate.matches_structured",
               max_abs_diff(inverse_adjugate_structured(a, t, cfg.tol), inverse_structured(a, t, cfg.tol)),
               kAdjugateTol);
  }
  return rep;
}

VerificationReport corollary(const SuiteConfig& cfg) {
  cfg.tol.validate();
  VerificationReport rep;
  for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
    Rng rng = trial_rng(cfg, kTagCorollary, trial);
    const std::size_t n = 1 + trial % 16;
    const DenseMatrix a = random_full_rank(n, n, rng, cfg.tol);
    const AngleMatrix t = random_angle_matrix(n, n, rng);
    const DenseMatrix oracle = inverse_lu(hadamard_product(a, transpose(materialize(t))), cfg.tol);
    rep.record("corollary.lu_oracle",
               frobenius_diff(inverse_structured_transposed(a, t, cfg.tol), oracle),
               kInverseTol * static_cast<double>(n));
  }
  return rep;
}

VerificationReport theorem2(const SuiteConfig& cfg) {
  cfg.tol.validate();
  VerificationReport rep;
  for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
    Rng rng = trial_rng(cfg, kTagTheorem2, trial);
    std::size_t m = 0;
    std::size_t n = 0;
    switch (trial % 3) {
      case 0:  // tall
        n = rng.uniform_int(1, 12);
        m = rng.uniform_int(n + 1, 24);
        break;
      case 1:
        n = m = rng.uniform_int(1, 24);
        break;
      default:  // wide
        m = rng.uniform_int(1, 12);
        n = rng.uniform_int(m + 1, 24);
        break;
    }
    const DenseMatrix a = random_full_rank(m, n, rng, cfg.tol);
    const AngleMatrix t = random_angle_matrix(m, n, rng);
    const DenseMatrix b = hadamard_product(a, materialize(t));
    const DenseMatrix a_pinv = pinv_full_rank(a, cfg.tol);
    const double oracle_tol = kInverseTol * (1.0 + frobenius_norm(a_pinv));

    const DenseMatrix x = pinv_structured(a, t, cfg.tol);
    const PenroseReport pen = penrose_check(b, x, cfg.tol);
    rep.record("thm2.penrose", std::max({pen.r1, pen.r2, pen.r3, pen.r4}), pen.tolerance);
    rep.record("thm2.lemma4_oracle", frobenius_diff(x, pinv_full_rank(b, cfg.tol)), oracle_tol);

    const GramHadamardFactors f = gram_hadamard_factorization(a, t);
    const DenseMatrix direct = matmul(conjugate_transpose(b), b);
    rep.record("thm2.gram_hadamard_factorization",
               max_abs_diff(direct, hadamard_product(f.gram_a, materialize(f.gram_t))),
               kGramHadamardTol * static_cast<double>(m * n));

    const DenseMatrix dual = pinv_structured(conjugate_transpose(a), t.hermitian(), cfg.tol);
    rep.record("thm2.hermitian_duality", frobenius_diff(dual, conjugate_transpose(x)), oracle_tol);

    if (m == n) {
      rep.record("thm2.square_degeneration", max_abs_diff(x, inverse_structured(a, t, cfg.tol)),
                 kSquareDegenerationTol);
    }
  }
  return rep;
}

bool is_suite_name(std::string_view name) noexcept {
  return name == "lemma1" || name == "lemma2" || name == "lemma3" || name == "thm1" ||
         name == "thm2" || name == "all";
}

std::vector<NamedReport> run_suite(std::string_view name, const SuiteConfig& cfg) {
  if (!is_suite_name(name)) {
    throw InvalidArgument("unknown suite '" + std::string(name) +
                          "' (lemma1|lemma2|lemma3|thm1|thm2|all)");
  }
  const bool all = name == "all";
  std::vector<NamedReport> out;
  if (all || name == "lemma1") out.emplace_back("lemma1", lemma1(cfg));
  if (all || name == "lemma2") out.emplace_back("lemma2", lemma2(cfg));
  if (all || name == "lemma3") out.emplace_back("lemma3", lemma3(cfg));
  if (all || name == "thm1") {
    out.emplace_back("thm1", theorem1(cfg));
    out.emplace_back("corollary", corollary(cfg));
    out.emplace_back("adjugate_oracle", adjugate_oracle(cfg));
  }
  if (all || name == "thm2") out.emplace_back("thm2", theorem2(cfg));
  return out;
}

}  // namespace hadinv::verify
