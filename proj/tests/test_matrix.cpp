#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "qgr/matrix.hpp"

using namespace qgr;

namespace {

Matrix<Rational> rational_matrix(const std::vector<std::vector<int>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r ? static_cast<int>(rows[0].size()) : 0;
  Matrix<Rational> m(r, c, Rational(0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return m;
}

Matrix<Fp> fp_matrix(const std::vector<std::vector<int>>& rows, std::uint32_t p) {
  int r = static_cast<int>(rows.size());
  int c = r ? static_cast<int>(rows[0].size()) : 0;
  Matrix<Fp> m(r, c, Fp(0, p));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j)
      m.at(i, j) = Fp(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], p);
  return m;
}

}  // namespace

TEST_CASE("rank of small matrices") {
  CHECK(rank(rational_matrix({{1, 2}, {2, 4}})) == 1);
  CHECK(rank(Matrix<Fp>::identity(2, Fp(0, 5))) == 2);
  CHECK(rank(Matrix<Rational>(0, 3, Rational(0))) == 0);
  CHECK(rank(Matrix<Rational>(3, 0, Rational(0))) == 0);
  CHECK(rank(fp_matrix({{1, 2}, {2, 4}}, 5)) == 1);
  CHECK(rank(fp_matrix({{1, 2}, {2, 5}}, 5)) == 2);
}

TEST_CASE("kernel of a single linear form") {
  Matrix<Fp> phi = fp_matrix({{0, 0, 1, -1, 0, 0}}, 3);
  auto basis = kernel_basis(phi);
  CHECK(basis.size() == 5);
  for (const auto& v : basis) {
    auto image = mat_vec(phi, v);
    for (const auto& x : image) CHECK(is_zero(x));
  }
}

TEST_CASE("kernel of an injective map is empty") {
  CHECK(kernel_basis(rational_matrix({{1}})).empty());
}

TEST_CASE("kernel over F_2") {
  auto basis = kernel_basis(fp_matrix({{1, 1}}, 2));
  REQUIRE(basis.size() == 1);
  CHECK(basis[0] == std::vector<Fp>{Fp(1, 2), Fp(1, 2)});
}

TEST_CASE("matrix-vector products") {
  Matrix<Rational> proj = rational_matrix({{1, 0, 0}, {0, 1, 0}});
  std::vector<Rational> abc{Rational(5), Rational(-2), Rational(9)};
  CHECK(mat_vec(proj, abc) == std::vector<Rational>{Rational(5), Rational(-2)});

  auto id = Matrix<Rational>::identity(3, Rational(0));
  CHECK(mat_vec(id, abc) == abc);

  Matrix<Rational> singular = rational_matrix({{1, 2}, {2, 4}});
  std::vector<Rational> kernel_vec{Rational(2), Rational(-1)};
  CHECK(mat_vec(singular, kernel_vec) == std::vector<Rational>{Rational(0), Rational(0)});

  CHECK_THROWS_AS(mat_vec(proj, kernel_vec), std::invalid_argument);
}

TEST_CASE("rank plus nullity equals the column count on random matrices") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> shape(0, 5), entry(-4, 4);
  for (int trial = 0; trial < 50; ++trial) {
    int r = shape(rng), c = shape(rng);
    Matrix<Rational> mq(r, c, Rational(0));
    Matrix<Fp> mp(r, c, Fp(0, 5));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) {
        int e = entry(rng);
        mq.at(i, j) = e;
        mp.at(i, j) = Fp(e, 5);
      }
    auto kq = kernel_basis(mq);
    auto kp = kernel_basis(mp);
    CHECK(rank(mq) + static_cast<int>(kq.size()) == c);
    CHECK(rank(mp) + static_cast<int>(kp.size()) == c);
    for (const auto& v : kq)
      for (const auto& x : mat_vec(mq, v)) CHECK(is_zero(x));
    for (const auto& v : kp)
      for (const auto& x : mat_vec(mp, v)) CHECK(is_zero(x));
    // Reducing an integer matrix mod p can only lose rank, never gain it.
    CHECK(rank(mp) <= rank(mq));
  }
}

TEST_CASE("kernel bases are canonical") {
  std::mt19937 rng(999);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int trial = 0; trial < 30; ++trial) {
    Matrix<Rational> m(3, 5, Rational(0));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 5; ++j) m.at(i, j) = entry(rng);
    auto once = kernel_basis(m);
    auto again = kernel_basis(m);
    CHECK(once == again);
    // Row operations leave the null space, and hence the canonical basis,
    // unchanged.
    Matrix<Rational> scaled = m;
    for (int j = 0; j < 5; ++j) scaled.at(1, j) = scaled.at(1, j) * Rational(7) ;
    scaled.swap_rows(0, 2);
    CHECK(kernel_basis(scaled) == once);
  }
}

TEST_CASE("zero-dimensional matrices are first-class") {
  Matrix<Fp> empty_rows(0, 4, Fp(0, 3));
  auto basis = kernel_basis(empty_rows);
  CHECK(basis.size() == 4);  // no constraints at all
  Matrix<Fp> empty_cols(4, 0, Fp(0, 3));
  CHECK(kernel_basis(empty_cols).empty());
  CHECK_THROWS_AS(Matrix<Rational>(-1, 2, Rational(0)), std::invalid_argument);
}

TEST_CASE("field carried in the zero prototype survives reduction") {
  Matrix<Rational> m = rational_matrix({{1, -1}, {0, 3}});
  Matrix<Fp> r = reduce_mod_p(m, 3);
  CHECK(r.at(0, 0).value() == 1);
  CHECK(r.at(0, 1).value() == 2);
  CHECK(r.at(1, 1).value() == 0);
  CHECK(r.zero().modulus() == 3);
}
