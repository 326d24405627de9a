#include <doctest.h>

#include <cmath>
#include <limits>

#include "hadinv/core/errors.hpp"
#include "hadinv/core/hadamard.hpp"
#include "hadinv/core/lu.hpp"
#include "hadinv/pseudo_inverse.hpp"
#include "hadinv/random.hpp"
#include "support/oracles.hpp"

using namespace hadinv;
using C = Complex;

namespace {
const C j{0.0, 1.0};
constexpr double kEntryEps = 1e-12;
}  // namespace

TEST_CASE("DenseMatrix rejects bad construction") {
  CHECK_THROWS_AS(DenseMatrix(0, 3), InvalidArgument);
  CHECK_THROWS_AS(DenseMatrix(2, 2, std::vector<C>(3)), DimensionError);
  std::vector<C> bad(4);
  bad[2] = C(std::numeric_limits<double>::quiet_NaN(), 0.0);
  CHECK_THROWS_AS(DenseMatrix(2, 2, bad), InvalidArgument);
  bad[2] = C(0.0, std::numeric_limits<double>::infinity());
  CHECK_THROWS_AS(DenseMatrix(2, 2, bad), InvalidArgument);
  CHECK_THROWS_AS((DenseMatrix{{1, 2}, {3}}), DimensionError);
  CHECK_THROWS_AS(DenseMatrix(2, 2).at(2, 0), InvalidArgument);
}

TEST_CASE("hadamard_product") {
  SUBCASE("all-ones is the identity") {
    Rng rng(1);
    const DenseMatrix a = random_complex_matrix(2, 3, rng);
    CHECK(hadamard_product(a, all_ones(2, 3)) == a);
  }
  SUBCASE("zeros annihilate") {
    const DenseMatrix b{{1, j}, {2, 3}};
    CHECK(hadamard_product(DenseMatrix(2, 2), b) == DenseMatrix(2, 2));
  }
  SUBCASE("worked example") {
    const DenseMatrix a{{1.0 + j, 2}, {0, -j}};
    const DenseMatrix b{{2, j}, {5, j}};
    const DenseMatrix expected{{2.0 + 2.0 * j, 2.0 * j}, {0, 1}};
    CHECK(max_abs_diff(hadamard_product(a, b), expected) == 0.0);
  }
  SUBCASE("shape mismatch names both shapes") {
    try {
      (void)hadamard_product(DenseMatrix(2, 3), DenseMatrix(3, 2));
      FAIL("expected DimensionError");
    } catch (const DimensionError& e) {
      const std::string msg = e.what();
      CHECK(msg.find("2 x 3") != std::string::npos);
      CHECK(msg.find("3 x 2") != std::string::npos);
    }
  }
}

TEST_CASE("hadamard_power") {
  Rng rng(2);
  const DenseMatrix a = random_complex_matrix(3, 4, rng);
  CHECK(hadamard_power(a, 1) == a);
  CHECK(max_abs_diff(hadamard_power(a, 2), hadamard_product(a, a)) <= kEntryEps);

  const DenseMatrix p{{2, j}, {-1, 4}};
  CHECK(max_abs_diff(hadamard_power(p, 2), DenseMatrix{{4, -1}, {1, 16}}) <= kEntryEps);

  SUBCASE("k = 0 is all-ones even with zero entries") {
    CHECK(hadamard_power(DenseMatrix{{0, 1}, {1, 0}}, 0) == all_ones(2, 2));
  }
  SUBCASE("negative power needs nonzero entries") {
    try {
      (void)hadamard_power(DenseMatrix{{0, 1}, {1, 1}}, -1);
      FAIL("expected ZeroEntryError");
    } catch (const ZeroEntryError& e) {
      CHECK(e.row() == 0);
      CHECK(e.col() == 0);
    }
  }
  SUBCASE("negative power inverts the positive one") {
    CHECK(max_abs_diff(hadamard_product(hadamard_power(a, -3), hadamard_power(a, 3)),
                       all_ones(3, 4)) <= 1e-12);
  }
}

TEST_CASE("hadamard_inverse") {
  CHECK(hadamard_inverse(all_ones(3, 3)) == all_ones(3, 3));
  CHECK(hadamard_inverse(DenseMatrix{{2}})(0, 0) == C(0.5, 0));
  const DenseMatrix h{{j, -1}, {2.0 * j, 1.0 + j}};
  const DenseMatrix expected{{-j, -1}, {-0.5 * j, 0.5 - 0.5 * j}};
  CHECK(max_abs_diff(hadamard_inverse(h), expected) <= kEntryEps);

  // tolerance-based zero test, not bitwise
  try {
    (void)hadamard_inverse(DenseMatrix{{1, 1}, {1, 1e-13}});
    FAIL("expected ZeroEntryError");
  } catch (const ZeroEntryError& e) {
    CHECK(e.row() == 1);
    CHECK(e.col() == 1);
  }
}

TEST_CASE("Hadamard properties on random matrices") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(seed, 77);
    const std::size_t m = rng.uniform_int(1, 9);
    const std::size_t n = rng.uniform_int(1, 9);
    const DenseMatrix a = random_complex_matrix(m, n, rng);
    const DenseMatrix b = random_complex_matrix(m, n, rng);
    // fused multiply-add kernels round a*b and b*a differently
    CHECK(max_abs_diff(hadamard_product(a, b), hadamard_product(b, a)) <= 1e-14);
    const DenseMatrix ones = hadamard_product(a, hadamard_inverse(a));
    CHECK(max_abs_diff(ones, all_ones(m, n)) <= kEntryEps);
  }
}

TEST_CASE("dense algebra") {
  Rng rng(5);
  const DenseMatrix a = random_complex_matrix(3, 4, rng);
  CHECK(max_abs_diff(matmul(identity(3), a), a) == 0.0);
  CHECK(conjugate_transpose(DenseMatrix{{j}})(0, 0) == -j);
  CHECK(conjugate_transpose(a) == conjugate(transpose(a)));
  CHECK(frobenius_norm(DenseMatrix{{3, 4.0 * j}}) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK_THROWS_AS(matmul(a, a), DimensionError);

  const DenseMatrix b = random_complex_matrix(4, 5, rng);
  CHECK(testing::max_grid_diff(testing::naive_matmul(testing::to_grid(a), testing::to_grid(b)),
                               matmul(a, b)) <= 1e-13);

  // no overflow for huge entries
  const DenseMatrix big{{1e200, 1e200}};
  CHECK(frobenius_norm(big) == doctest::Approx(std::sqrt(2.0) * 1e200));
}

TEST_CASE("LU factorization") {
  SUBCASE("examples") {
    CHECK(lu_factorize(identity(4)).det() == C(1, 0));
    CHECK(lu_factorize(DenseMatrix{{0, 1}, {1, 0}}).det() == C(-1, 0));
    const DenseMatrix inv = lu_factorize(DenseMatrix{{2.0 * j, 0}, {0, 3}}).inverse();
    CHECK(max_abs_diff(inv, DenseMatrix{{-0.5 * j, 0}, {0, 1.0 / 3.0}}) <= 1e-15);
  }
  SUBCASE("non-square input") { CHECK_THROWS_AS(lu_factorize(DenseMatrix(2, 3)), DimensionError); }
  SUBCASE("singular input carries the pivot") {
    const LuFactorization lu = lu_factorize(DenseMatrix{{1, 2}, {2, 4}});
    CHECK(lu.is_singular());
    CHECK(std::abs(lu.det()) <= 1e-15);
    try {
      (void)lu.inverse();
      FAIL("expected SingularMatrixError");
    } catch (const SingularMatrixError& e) {
      CHECK(e.pivot() <= lu.pivot_threshold());
    }
    CHECK_THROWS_AS(inverse_lu(DenseMatrix(3, 3)), SingularMatrixError);
  }
  SUBCASE("pivot ties go to the lowest row") {
    const LuFactorization lu = lu_factorize(DenseMatrix{{0.5, 1, 0}, {1, 0, 1}, {-1, 1, 1}});
    CHECK(lu.permutation()[0] == 1);
  }
  SUBCASE("P A = L U and determinant against Laplace expansion") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      Rng rng(seed, 9);
      const std::size_t n = rng.uniform_int(1, 7);
      const DenseMatrix a = random_complex_matrix(n, n, rng);
      const LuFactorization lu = lu_factorize(a);
      DenseMatrix pa(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) pa(i, k) = a(lu.permutation()[i], k);
      CHECK(frobenius_diff(matmul(lu.lower(), lu.upper()), pa) <= 1e-8 * frobenius_norm(a));
      const C expected = testing::laplace_det(testing::to_grid(a));
      CHECK(std::abs(lu.det() - expected) <= 1e-10 * (1.0 + std::abs(expected)));
    }
  }
  SUBCASE("inverse residual and extended-precision oracle") {
    ToleranceConfig tol;
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      Rng rng(seed, 10);
      const std::size_t n = rng.uniform_int(1, 16);
      const DenseMatrix a = random_full_rank(n, n, rng, tol);
      const DenseMatrix inv = inverse_lu(a);
      CHECK(frobenius_diff(matmul(a, inv), identity(n)) <= tol.residual_eps);
      CHECK(testing::max_grid_diff(testing::gauss_jordan_inverse(testing::to_grid(a)), inv) <= 1e-8);
    }
  }
  SUBCASE("det is multiplicative") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      Rng rng(seed, 11);
      const std::size_t n = rng.uniform_int(1, 8);
      const DenseMatrix a = random_complex_matrix(n, n, rng);
      const DenseMatrix b = random_complex_matrix(n, n, rng);
      const C lhs = det_lu(matmul(a, b));
      const C rhs = det_lu(a) * det_lu(b);
      CHECK(std::abs(lhs - rhs) <= 1e-10 * std::abs(rhs));
    }
  }
  SUBCASE("factorization counter") {
    const std::size_t before = lu_factorization_count();
    (void)inverse_lu(identity(3));
    (void)det_lu(identity(2));
    CHECK(lu_factorization_count() - before == 2);
  }
}

TEST_CASE("ToleranceConfig validation") {
  ToleranceConfig tol;
  CHECK_NOTHROW(tol.validate());
  tol.rank_eps = 0.0;
  CHECK_THROWS_AS(tol.validate(), InvalidArgument);
  tol.rank_eps = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(tol.validate(), InvalidArgument);
}
