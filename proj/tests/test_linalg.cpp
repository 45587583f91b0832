#include <doctest.h>

#include <omp.h>

#include "eip/linalg.hpp"
#include "support/oracles.hpp"

using namespace eip;

TEST_CASE("prime field arithmetic") {
  PrimeField f(7);
  CHECK(f.add(5, 4) == 2);
  CHECK(f.sub(2, 5) == 4);
  CHECK(f.mul(3, 5) == 1);
  CHECK(f.inv(3) == 5);
  CHECK(f.pow(3, 6) == 1);
  CHECK(f.reduce(-1) == 6);
  CHECK_THROWS_AS(PrimeField(9), ParameterError);
  CHECK_THROWS_AS(PrimeField(1), ParameterError);
  CHECK_THROWS_AS((void)f.inv(0), ParameterError);
  CHECK(is_prime(2147483647));
  CHECK_FALSE(is_prime(2147483649ULL));
}

TEST_CASE("rank of zero and identity") {
  PrimeField f(5);
  CHECK(rank(Matrix(f, 3, 3)) == 0);
  for (std::size_t n : {1u, 4u, 9u}) CHECK(rank(Matrix::identity(f, n)) == n);
  CHECK(rank(Matrix(f, 0, 4)) == 0);
}

TEST_CASE("rank is invariant under transpose and permutations") {
  PrimeField f(5);
  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    Matrix m = oracle::random_matrix(f, 6, 4, rng);
    if (t % 3 == 0) m = oracle::random_matrix(f, 6, 2, rng) * oracle::random_matrix(f, 2, 4, rng);
    const auto k = rank(m);
    CHECK(k == rank(transpose(m)));
    CHECK(k == serial::rank(m));
    std::vector<std::size_t> perm{3, 0, 2, 1};
    CHECK(rank(select_columns(m, perm)) == k);
  }
}

TEST_CASE("rank of a product is bounded by the factors") {
  PrimeField f(3);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    Matrix a = oracle::random_matrix(f, 5, 3, rng), b = oracle::random_matrix(f, 3, 6, rng);
    CHECK(rank(a * b) <= std::min(rank(a), rank(b)));
  }
}

TEST_CASE("kernel basis") {
  PrimeField f(5);
  CHECK(kernel_basis(Matrix::identity(f, 4)).cols() == 0);
  CHECK(kernel_basis(Matrix(f, 3, 3)).cols() == 3);
  PrimeField g(7);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 40; ++t) {
    const std::size_t rows = 1 + t % 5, cols = 1 + (t * 7) % 6;
    Matrix m = oracle::random_matrix(g, rows, cols, rng);
    if (t % 4 == 0) m = oracle::random_matrix(g, rows, 1, rng) * oracle::random_matrix(g, 1, cols, rng);
    const Matrix k = kernel_basis(m);
    CHECK((m * k).is_zero());
    CHECK(rank(k) == k.cols());
    CHECK(k.cols() == cols - rank(m));
  }
}

TEST_CASE("image, cokernel and solve") {
  PrimeField f(5);
  CHECK(cokernel_projection(Matrix::identity(f, 3)).dim == 0);
  CHECK(cokernel_projection(Matrix(f, 4, 2)).dim == 4);
  CHECK_THROWS_AS((void)solve(Matrix(f, 2, 2), Matrix(f, 3, 1)), DimensionError);

  std::mt19937_64 rng(9);
  for (int t = 0; t < 30; ++t) {
    Matrix m = oracle::random_matrix(f, 5, 3, rng);
    if (t % 2) m = oracle::random_matrix(f, 5, 1, rng) * oracle::random_matrix(f, 1, 3, rng);
    const Matrix im = image_basis(m);
    CHECK(im.cols() == rank(m));
    CHECK(contains(im, m));
    const Cokernel c = cokernel_projection(m);
    CHECK((c.projector * m).is_zero());
    CHECK(rank(c.projector) == m.rows() - rank(m));
    CHECK(c.dim == c.complement.size());
    // Complement unit vectors map to the cokernel basis.
    for (std::size_t s = 0; s < c.dim; ++s)
      for (std::size_t e = 0; e < c.dim; ++e) CHECK(c.projector(e, c.complement[s]) == (e == s ? 1u : 0u));
    const Matrix x = oracle::random_matrix(f, 3, 1, rng);
    const Matrix b = m * x;
    auto sol = solve(m, b.col(0));
    REQUIRE(sol);
    CHECK(apply(m, *sol) == b.col(0));
  }
  Matrix zero(f, 2, 2);
  Vector b{1, 0};
  CHECK_FALSE(solve(zero, b));
}

TEST_CASE("cokernel of the arrow combination into P(0) of K_3") {
  // P(1) -> P(0) at vertex 1 is the column alpha inside the degree-one monomials.
  PrimeField f(5);
  for (const auto& a : projective_points(f, 3)) {
    Matrix col(f, 3, 1);
    for (std::size_t l = 0; l < 3; ++l) col.set(l, 0, a[l]);
    CHECK(cokernel_projection(col).dim == 2);
  }
}

TEST_CASE("inverse, intersection and sums") {
  PrimeField f(7);
  std::mt19937_64 rng(4);
  for (int t = 0; t < 20; ++t) {
    Matrix g = oracle::random_invertible(f, 4, rng);
    auto h = inverse(g);
    REQUIRE(h);
    CHECK(g * *h == Matrix::identity(f, 4));
  }
  Matrix sing = Matrix::from_rows(f, {{1, 2}, {2, 4}});
  CHECK_FALSE(inverse(sing));
  CHECK_FALSE(is_invertible(sing));
  Matrix u = Matrix::from_rows(f, {{1, 0}, {0, 1}, {0, 0}});
  Matrix v = Matrix::from_rows(f, {{0, 0}, {1, 0}, {0, 1}});
  CHECK(intersect(u, v).cols() == 1);
  CHECK(span_sum(u, v).cols() == 3);
}

TEST_CASE("parallel kernels agree with the serial reference") {
  PrimeField f(101);
  std::mt19937_64 rng(17);
  const int saved = omp_get_max_threads();
  omp_set_num_threads(4);
  for (std::size_t n : {60u, 180u}) {
    Matrix a = oracle::random_matrix(f, n, n, rng);
    Matrix b = oracle::random_matrix(f, n, n / 2, rng) * oracle::random_matrix(f, n / 2, n, rng);
    CHECK(a * b == serial::multiply(a, b));
    CHECK(rank(b) == serial::rank(b));
    CHECK(rref(b).reduced == serial::rref(b).reduced);
    CHECK(rref(a).pivots == serial::rref(a).pivots);
  }
  omp_set_num_threads(saved);
}

TEST_CASE("matrix shape errors") {
  PrimeField f(5), g(7);
  CHECK_THROWS_AS((void)(Matrix(f, 2, 3) * Matrix(f, 2, 3)), DimensionError);
  CHECK_THROWS_AS((void)(Matrix(f, 2, 2) + Matrix(g, 2, 2)), ConfigError);
  CHECK(power(Matrix::from_rows(f, {{0, 1}, {0, 0}}), 2).is_zero());
}
