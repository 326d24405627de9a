#include <doctest.h>

#include <numbers>

#include "hadinv/core/errors.hpp"
#include "hadinv/core/hadamard.hpp"
#include "hadinv/core/lu.hpp"
#include "hadinv/pseudo_inverse.hpp"
#include "hadinv/random.hpp"
#include "hadinv/structured_inverse.hpp"

using namespace hadinv;
using C = Complex;
using std::numbers::pi;

namespace {
const C j{0.0, 1.0};
}

TEST_CASE("pinv_full_rank examples") {
  CHECK(max_abs_diff(pinv_full_rank(identity(3)), identity(3)) == 0.0);
  CHECK(max_abs_diff(pinv_full_rank(DenseMatrix{{1}, {1}}), DenseMatrix{{0.5, 0.5}}) <= 1e-15);
  CHECK(max_abs_diff(pinv_full_rank(DenseMatrix{{1, 0, 0}, {0, 1, 0}}),
                     DenseMatrix{{1, 0}, {0, 1}, {0, 0}}) <= 1e-15);
}

TEST_CASE("pinv_full_rank rejects rank deficiency") {
  try {
    (void)pinv_full_rank(DenseMatrix{{1, 2}, {2, 4}, {3, 6}});
    FAIL("expected RankDeficientError");
  } catch (const RankDeficientError& e) {
    CHECK(e.pivot() >= 0.0);
  }
  CHECK_THROWS_AS(pinv_full_rank(DenseMatrix{{1, 2, 3}, {2, 4, 6}}), RankDeficientError);
  CHECK_THROWS_AS(pinv_full_rank(DenseMatrix{{1, 1}, {1, 1}}), SingularMatrixError);
}

TEST_CASE("penrose_check") {
  const PenroseReport id = penrose_check(identity(3), identity(3));
  CHECK(id.pass);
  CHECK(id.r1 == 0.0);
  CHECK(id.r2 == 0.0);
  CHECK(id.r3 == 0.0);
  CHECK(id.r4 == 0.0);
  CHECK_THROWS_AS(penrose_check(DenseMatrix(2, 3), DenseMatrix(2, 3)), DimensionError);

  for (std::uint64_t s = 0; s < 30; ++s) {
    Rng rng(s, 31);
    const std::size_t m = rng.uniform_int(1, 16);
    const std::size_t n = rng.uniform_int(1, 16);
    const DenseMatrix a = random_full_rank(m, n, rng);
    const DenseMatrix x = pinv_full_rank(a);
    CHECK(penrose_check(a, x).pass);
    const PenroseReport doubled = penrose_check(a, scale(x, 2.0));
    CHECK_FALSE(doubled.pass);
    CHECK(doubled.r2 > doubled.tolerance);
  }
}

TEST_CASE("gram_hadamard_factorization") {
  Rng rng(2);
  SUBCASE("zero phases reduce to A^H A") {
    const DenseMatrix a = random_complex_matrix(4, 3, rng);
    const GramHadamardFactors f = gram_hadamard_factorization(a, AngleMatrix({0, 0, 0, 0}, {0, 0, 0}));
    CHECK(f.scale == 4);
    CHECK(materialize(f.gram_t) == all_ones(3, 3));
    CHECK(f.gram_a == matmul(conjugate_transpose(a), a));
  }
  SUBCASE("2 x 1 hand example") {
    const DenseMatrix a{{1}, {1}};
    const AngleMatrix t({0, pi / 2}, {0});
    const GramHadamardFactors f = gram_hadamard_factorization(a, t);
    const DenseMatrix b = hadamard_product(a, materialize(t));
    CHECK(max_abs_diff(matmul(conjugate_transpose(b), b), DenseMatrix{{2}}) <= 1e-15);
    CHECK(f.gram_a == DenseMatrix{{2}});
    CHECK(materialize(f.gram_t) == DenseMatrix{{1}});
    CHECK(f.scale == 2);
  }
  SUBCASE("random identity, up to 32 x 32") {
    for (std::uint64_t s = 0; s < 10; ++s) {
      Rng r(s, 33);
      const std::size_t m = r.uniform_int(1, 32);
      const std::size_t n = r.uniform_int(1, 32);
      const DenseMatrix a = random_complex_matrix(m, n, r);
      const AngleMatrix t = random_angle_matrix(m, n, r);
      const GramHadamardFactors f = gram_hadamard_factorization(a, t);
      const DenseMatrix b = hadamard_product(a, materialize(t));
      CHECK(max_abs_diff(matmul(conjugate_transpose(b), b),
                         hadamard_product(f.gram_a, materialize(f.gram_t))) <=
            1e-12 * static_cast<double>(m * n));
    }
  }
  CHECK_THROWS_AS(gram_hadamard_factorization(DenseMatrix(2, 2), AngleMatrix({0}, {0})), DimensionError);
}

TEST_CASE("pinv_structured") {
  SUBCASE("hand example") {
    const DenseMatrix a{{1}, {1}};
    const AngleMatrix t({0, pi / 2}, {0});
    const DenseMatrix expected{{0.5, -0.5 * j}};
    CHECK(max_abs_diff(pinv_structured(a, t), expected) <= 1e-15);
    const DenseMatrix b = hadamard_product(a, materialize(t));
    CHECK(max_abs_diff(pinv_full_rank(b), expected) <= 1e-15);
  }
  SUBCASE("square case is the structured inverse") {
    Rng rng(3);
    const DenseMatrix a = random_full_rank(5, 5, rng);
    const AngleMatrix t = random_angle_matrix(5, 5, rng);
    CHECK(max_abs_diff(pinv_structured(a, t), inverse_structured(a, t)) <= 1e-10);
  }
  SUBCASE("tall and wide satisfy Penrose for the masked matrix") {
    Rng rng(4);
    for (auto [m, n] : {std::pair<std::size_t, std::size_t>{8, 5}, {5, 8}, {24, 12}, {12, 24}}) {
      const DenseMatrix a = random_full_rank(m, n, rng);
      const AngleMatrix t = random_angle_matrix(m, n, rng);
      const DenseMatrix b = hadamard_product(a, materialize(t));
      const DenseMatrix x = pinv_structured(a, t);
      const PenroseReport pen = penrose_check(b, x);
      CHECK(pen.pass);
      CHECK(std::max({pen.r1, pen.r2, pen.r3, pen.r4}) <= 1e-8);
      CHECK(frobenius_diff(x, pinv_full_rank(b)) <= 1e-8 * (1.0 + frobenius_norm(pinv_full_rank(a))));
      // substitution A -> A^H, Theta -> Theta^H conjugate-transposes the result
      const DenseMatrix dual = pinv_structured(conjugate_transpose(a), t.hermitian());
      CHECK(frobenius_diff(dual, conjugate_transpose(x)) <= 1e-10);
    }
  }
  SUBCASE("never factorizes anything larger than min(m, n)") {
    Rng rng(5);
    const DenseMatrix a = random_full_rank(20, 4, rng);
    const AngleMatrix t = random_angle_matrix(20, 4, rng);
    const std::size_t before = lu_factorization_count();
    (void)pinv_structured(a, t);
    CHECK(lu_factorization_count() - before == 1);
  }
  CHECK_THROWS_AS(pinv_structured(DenseMatrix(3, 2), AngleMatrix({0, 0}, {0, 0})), DimensionError);
  CHECK_THROWS_AS(pinv_structured(DenseMatrix{{1, 2}, {2, 4}, {3, 6}}, AngleMatrix({0, 0, 0}, {0, 0})),
                  RankDeficientError);
}

TEST_CASE("condition_proxy") {
  CHECK(condition_proxy(identity(4)) == doctest::Approx(4.0));
  CHECK(condition_proxy(DenseMatrix{{1}, {1}}) == doctest::Approx(1.0));
  CHECK_THROWS_AS(condition_proxy(DenseMatrix{{1, 1}, {1, 1}}), NumericalError);
}
