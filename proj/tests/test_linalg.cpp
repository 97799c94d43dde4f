#include <random>

#include "doctest.h"
#include "sing/error.hpp"
#include "sing/linalg.hpp"

using namespace sing;

namespace {

const Field F7 = Field::prime(7);
const Field Q = Field::rational();

Matrix random_matrix(const Field& f, std::size_t r, std::size_t c, std::mt19937_64& rng, int spread = 3) {
  std::uniform_int_distribution<int> d(-spread, spread);
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, Scalar(f, std::int64_t{d(rng)}));
  return m;
}

// Independent rank oracle: count of nonzero rows after plain forward elimination on rationals.
std::size_t naive_rank_q(const Matrix& m) {
  std::vector<std::vector<mpq_class>> a(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m.at(i, j).rational();
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && a[piv][c] == 0) ++piv;
    if (piv == m.rows()) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      mpq_class f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < m.cols(); ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace

TEST_CASE("scalars") {
  CHECK(Scalar(F7, std::int64_t{-1}).residue() == 6);
  CHECK((Scalar(F7, std::int64_t{3}) * Scalar(F7, std::int64_t{5})).residue() == 1);
  CHECK(Scalar(F7, std::int64_t{3}).inverse().residue() == 5);
  CHECK(Scalar::parse(F7, "1/2").residue() == 4);
  CHECK(Scalar::parse(Q, "-6/4").to_string() == "-3/2");
  CHECK(Scalar::parse(Q, "4/2").to_string() == "2");
  CHECK_THROWS_AS(Scalar::zero(F7).inverse(), Error);
  CHECK_THROWS_AS(Field::prime(8), Error);
  try {
    (void)(Scalar::one(F7) + Scalar::one(Q));
    FAIL("expected FieldMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::FieldMismatch);
  }
}

TEST_CASE("rank examples") {
  CHECK(rank(Matrix::identity(F7, 2)) == 2);
  CHECK(rank(Matrix::zero(F7, 3, 4)) == 0);
  CHECK(rank(Matrix::from_rows(Q, {{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("kernel examples") {
  CHECK(kernel_basis(Matrix::identity(Q, 3)).cols() == 0);
  Matrix z = kernel_basis(Matrix::zero(F7, 2, 2));
  CHECK(z.cols() == 2);
  CHECK(rank(z) == 2);
  Matrix k = kernel_basis(Matrix::from_rows(Q, {{1, 2}, {2, 4}}));
  REQUIRE(k.cols() == 1);
  // proportional to (2, -1)
  CHECK(k.at(0, 0) * Scalar(Q, std::int64_t{-1}) == k.at(1, 0) * Scalar(Q, std::int64_t{2}));
  CHECK(!k.is_zero());
}

TEST_CASE("mixed-field matrix product is rejected") {
  try {
    (void)(Matrix::identity(F7, 2) * Matrix::identity(Q, 2));
    FAIL("expected FieldMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::FieldMismatch);
  }
}

TEST_CASE("composite rank examples") {
  DirectSystem sys{{2, 2, 2, 2}, {}};
  Matrix d = Matrix::from_rows(Q, {{1, 0}, {0, 0}});
  sys.maps = {d, d, d};
  CHECK(composite_rank(sys, 0, 0) == 2);
  CHECK(composite_rank(sys, 0, 3) == eventual_rank(d));
  CHECK(composite_rank(sys, 0, 3) == 1);

  DirectSystem zero{{2, 3, 1}, {Matrix::zero(Q, 3, 2), Matrix::zero(Q, 1, 3)}};
  CHECK(composite_rank(zero, 0, 2) == 0);
  CHECK_THROWS_AS(composite_rank(zero, 2, 1), Error);
  CHECK_THROWS_AS(composite_rank(zero, 0, 3), Error);
}

TEST_CASE("eventual rank examples") {
  CHECK(eventual_rank(Matrix::identity(F7, 4)) == 4);
  CHECK(eventual_rank(Matrix::from_rows(F7, {{0, 1, 1}, {0, 0, 1}, {0, 0, 0}})) == 0);
  CHECK(eventual_rank(Matrix::from_rows(Q, {{1, 0}, {0, 0}})) == 1);
  try {
    (void)eventual_rank(Matrix::zero(Q, 2, 3));
    FAIL("expected NonSquare");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonSquare);
  }
}

TEST_CASE("rank and kernel properties on random matrices") {
  std::mt19937_64 rng(17);
  for (int it = 0; it < 60; ++it) {
    const Field& f = (it % 2) ? F7 : Q;
    std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    Matrix a = random_matrix(f, r, c, rng, it % 3 == 0 ? 1 : 3);
    std::size_t rk = rank(a);
    CHECK(rk <= std::min(r, c));
    if (!f.is_prime()) CHECK(rk == naive_rank_q(a));
    Matrix k = kernel_basis(a);
    CHECK(k.cols() == c - rk);
    CHECK(rank(k) == k.cols());
    if (k.cols() > 0) CHECK((a * k).is_zero());
    CHECK(row_reduce(a).reduced == row_reduce(a).reduced);
  }
}

TEST_CASE("solve, inverse and spans") {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 30; ++it) {
    const Field& f = (it % 2) ? F7 : Q;
    Matrix a = random_matrix(f, 4, 4, rng);
    Matrix b = random_matrix(f, 4, 2, rng);
    Matrix ab = a * b;
    auto x = solve(a, ab);
    REQUIRE(x.has_value());
    CHECK(a * *x == ab);
    CHECK(column_span_contains(a, ab));
    if (rank(a) == 4) CHECK(a * inverse(a) == Matrix::identity(f, 4));
  }
  Matrix a = Matrix::from_rows(Q, {{1, 0}, {0, 0}});
  CHECK_FALSE(solve(a, Matrix::from_rows(Q, {{0}, {1}})).has_value());
  CHECK_THROWS_AS(inverse(a), Error);
  CHECK(complement_columns(a, Matrix::identity(Q, 2)) == std::vector<std::size_t>{1});
}

TEST_CASE("composite rank monotonicity and eventual-rank idempotence") {
  std::mt19937_64 rng(99);
  for (int it = 0; it < 20; ++it) {
    const Field& f = (it % 2) ? F7 : Q;
    DirectSystem sys;
    sys.spaces = {3, 3, 3, 3, 3};
    for (int i = 0; i < 4; ++i) sys.maps.push_back(random_matrix(f, 3, 3, rng, 1));
    for (std::size_t p = 0; p < 5; ++p)
      for (std::size_t q = p + 1; q < 5; ++q) {
        CHECK(composite_rank(sys, p, q) <= composite_rank(sys, p, q - 1));
        if (p > 0) CHECK(composite_rank(sys, p, q) >= composite_rank(sys, p - 1, q));
      }
    Matrix t = sys.maps[0];
    Matrix tn = t * t * t;
    CHECK(eventual_rank(t) == rank(tn));
    CHECK(rank(tn) == rank(tn * t));
  }
}
