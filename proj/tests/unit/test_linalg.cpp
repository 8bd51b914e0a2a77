#include "doctest.h"
#include "gorlab/linalg.hpp"

#include <functional>
#include <random>

using namespace gorlab;

namespace {

const BaseRing ZZ = BaseRing::integers();
const BaseRing QQ = BaseRing::rationals();

std::vector<mpz_class> ints(std::initializer_list<long> v) {
  std::vector<mpz_class> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

// Oracle: invariant factors from determinantal divisors (gcd of k x k minors).
std::vector<mpz_class> determinantal_factors(const Matrix& m) {
  std::vector<mpz_class> divisors{1};
  std::size_t n = std::min(m.rows(), m.cols());
  for (std::size_t k = 1; k <= n; ++k) {
    mpz_class g = 0;
    std::vector<std::size_t> rs(k), cs(k);
    std::function<void(std::size_t, std::size_t)> pick_rows, pick_cols;
    pick_cols = [&](std::size_t pos, std::size_t from) {
      if (pos == k) {
        Scalar d = determinant(m.select_rows(rs).select_cols(cs));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_num_mpz_t());
        return;
      }
      for (std::size_t c = from; c < m.cols(); ++c) {
        cs[pos] = c;
        pick_cols(pos + 1, c + 1);
      }
    };
    pick_rows = [&](std::size_t pos, std::size_t from) {
      if (pos == k) {
        pick_cols(0, 0);
        return;
      }
      for (std::size_t r = from; r < m.rows(); ++r) {
        rs[pos] = r;
        pick_rows(pos + 1, r + 1);
      }
    };
    pick_rows(0, 0);
    if (g == 0) break;
    divisors.push_back(g);
  }
  std::vector<mpz_class> out;
  for (std::size_t k = 1; k < divisors.size(); ++k) {
    mpz_class d = divisors[k] / divisors[k - 1];
    if (d != 1) out.push_back(d);
  }
  return out;
}

Matrix random_matrix(std::mt19937_64& rng, const BaseRing& R, std::size_t r, std::size_t c, long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  Matrix m(R, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, Scalar(dist(rng)));
  return m;
}

Matrix random_unimodular(std::mt19937_64& rng, std::size_t n) {
  Matrix u = Matrix::identity(ZZ, n);
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<long> coef(-2, 2);
  for (int step = 0; step < 3 * static_cast<int>(n); ++step) {
    std::size_t a = idx(rng), b = idx(rng);
    if (a == b) continue;
    Matrix e = Matrix::identity(ZZ, n);
    e(a, b) = coef(rng);
    u = e * u;
  }
  return u;
}

}  // namespace

TEST_CASE("smith normal form examples") {
  CHECK(smith_normal_form(Matrix::identity(ZZ, 2)).invariant_factors.empty());
  auto z = smith_normal_form(Matrix::zero(ZZ, 2, 3));
  CHECK(z.D.is_zero());
  CHECK(z.invariant_factors.empty());
  Matrix m = Matrix::from_rows(ZZ, {{2, 4}, {6, 8}});
  auto s = smith_normal_form(m);
  CHECK(s.invariant_factors == ints({2, 4}));
  CHECK(determinantal_factors(m) == ints({2, 4}));
  CHECK(s.U * m * s.V == s.D);
}

TEST_CASE("smith normal form properties on random integer matrices") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = 1 + trial % 4, c = 1 + (trial / 4) % 4;
    Matrix m = random_matrix(rng, ZZ, r, c, -6, 6);
    auto s = smith_normal_form(m);
    CHECK(s.U * m * s.V == s.D);
    CHECK(abs(determinant(s.U)) == 1);
    CHECK(abs(determinant(s.V)) == 1);
    CHECK(s.U * s.U_inverse == Matrix::identity(ZZ, r));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j) CHECK(s.D(i, j) == 0);
    for (std::size_t i = 0; i + 1 < s.rank; ++i) CHECK(s.D(i + 1, i + 1).get_num() % s.D(i, i).get_num() == 0);
    CHECK(s.invariant_factors == determinantal_factors(m));
  }
}

TEST_CASE("cokernel invariants are unimodular invariants") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    Matrix m = random_matrix(rng, ZZ, 3, 3, -5, 5);
    RInvariants base = cokernel_invariants(m);
    Matrix u = random_unimodular(rng, 3), v = random_unimodular(rng, 3);
    CHECK(cokernel_invariants(u * m * v) == base);
  }
  CHECK(cokernel_invariants(Matrix::identity(ZZ, 3)).is_zero());
  auto d = cokernel_invariants(Matrix::from_rows(ZZ, {{2, 0}, {0, 3}}));
  CHECK(d.free_rank == 0);
  CHECK(d.torsion == ints({6}));
  CHECK(cokernel_invariants(Matrix::zero(ZZ, 2, 2)).free_rank == 2);
}

TEST_CASE("field kernels") {
  CHECK(field_kernel(Matrix::identity(QQ, 3)).cols() == 0);
  Matrix k0 = field_kernel(Matrix::zero(QQ, 2, 2));
  CHECK(k0 == Matrix::identity(QQ, 2));
  BaseRing F2 = BaseRing::prime_field(2);
  Matrix k = field_kernel(Matrix::from_rows(F2, {{1, 1}, {1, 1}}));
  REQUIRE(k.cols() == 1);
  CHECK(k == Matrix::from_rows(F2, {{1}, {1}}));
  CHECK_THROWS_AS(field_kernel(Matrix::identity(ZZ, 2)), ShapeError);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix m = random_matrix(rng, BaseRing::prime_field(5), 3, 5, 0, 4);
    Matrix K = field_kernel(m);
    CHECK((m * K).is_zero());
    CHECK(K.cols() == 5 - rank(m));
    CHECK(rank(K) == K.cols());
  }
}

TEST_CASE("solve_linear") {
  Matrix b = Matrix::from_rows(QQ, {{3}, {-1}});
  CHECK(*solve_linear(Matrix::identity(QQ, 2), b) == b);
  CHECK_FALSE(solve_linear(Matrix::from_rows(ZZ, {{2}}), Matrix::from_rows(ZZ, {{3}})).has_value());
  Matrix m = Matrix::from_rows(ZZ, {{2, 3}});
  auto x = solve_linear(m, Matrix::from_rows(ZZ, {{1}}));
  REQUIRE(x.has_value());
  CHECK(m * *x == Matrix::from_rows(ZZ, {{1}}));
  CHECK_THROWS_AS(solve_linear(m, Matrix::from_rows(ZZ, {{1}, {2}})), ShapeError);
  CHECK_FALSE(BaseRing::rationals().is_integers());
  CHECK_THROWS(BaseRing::prime_field(6));
}

TEST_CASE("integer kernel is saturated") {
  Matrix m = Matrix::from_rows(ZZ, {{2, 4, 6}});
  Matrix K = kernel(m);
  CHECK(K.cols() == 2);
  CHECK((m * K).is_zero());
  // (1, 1, -1) lies in the kernel lattice and must be an integer combination.
  CHECK(solve_linear(K, Matrix::from_rows(ZZ, {{1}, {1}, {-1}})).has_value());
}
