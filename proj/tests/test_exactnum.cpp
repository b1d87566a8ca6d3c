#include <doctest.h>

#include "oracle.hpp"
#include "support.hpp"
#include "wrb/exactnum.hpp"

using namespace wrb;

namespace {

oracle::Rows rows_of(const Matrix& m) {
  oracle::Rows r(m.rows(), oracle::V(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r[i][j] = m(i, j);
  return r;
}

}  // namespace

TEST_SUITE("exactnum") {
  TEST_CASE("scalars parse and print canonically") {
    CHECK(parse_scalar("3") == 3);
    CHECK(parse_scalar("-4/6") == Scalar(-2, 3));
    CHECK(format_scalar(Scalar(6, 4)) == "3/2");
    CHECK(format_scalar(Scalar(-5)) == "-5");
    CHECK_THROWS_AS(parse_scalar("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_scalar("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_scalar(""), std::invalid_argument);
  }

  TEST_CASE("rank examples") {
    CHECK(rank(Matrix::identity(2)) == 2);
    CHECK(rank(Matrix(0, 5)) == 0);
    CHECK(rank(Matrix::from_rows({{1, 2}, {2, 4}})) == 1);
  }

  TEST_CASE("kernel examples") {
    CHECK(kernel_basis(Matrix::identity(3)).empty());
    CHECK(kernel_basis(Matrix(2, 3)).size() == 3);
    const auto k = kernel_basis(Matrix::from_rows({{1, 1}}));
    REQUIRE(k.size() == 1);
    CHECK(k[0][0] == -k[0][1]);
    CHECK(k[0][0] != 0);
  }

  TEST_CASE("solve examples") {
    const Vec b{3, Scalar(1, 2)};
    CHECK(*solve(Matrix::identity(2), b) == b);
    CHECK_FALSE(solve(Matrix(2, 2), b).has_value());
    CHECK(*solve(Matrix::from_rows({{2}}), Vec{1}) == Vec{Scalar(1, 2)});
    CHECK_THROWS_AS(solve(Matrix::identity(2), Vec{1}), DimensionError);
  }

  TEST_CASE("rank, kernel and solve agree with the oracle on random matrices") {
    support::Gen gen(11);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t r = 1 + gen.below(5), c = 1 + gen.below(5);
      Matrix m = gen.matrix(r, c);
      // force some rank deficiency
      if (r > 1 && trial % 2 == 0)
        for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * 2;
      const std::size_t rk = rank(m);
      CHECK(rk == oracle::rank(rows_of(m)));
      CHECK(rank(m, Exec::serial) == rk);
      const auto ker = kernel_basis(m);
      CHECK(ker.size() == c - rk);
      for (const auto& v : ker) CHECK(is_zero(m.apply(v)));
      const Vec x = gen.vec(c);
      const Vec b = m.apply(x);
      const auto y = solve(m, b);
      REQUIRE(y.has_value());
      CHECK(m.apply(*y) == b);
    }
  }

  TEST_CASE("inconsistent systems are detected by rank") {
    support::Gen gen(12);
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t r = 2 + gen.below(3), c = 1 + gen.below(3);
      const Matrix m = gen.matrix(r, c);
      const Vec b = gen.vec(r);
      const bool consistent = rank(hstack(m, Matrix::from_columns(r, {b}))) == rank(m);
      CHECK(solve(m, b).has_value() == consistent);
    }
  }

  TEST_CASE("matrix arithmetic") {
    const Matrix a = Matrix::from_rows({{1, 2}, {3, 4}});
    CHECK(a * Matrix::identity(2) == a);
    CHECK(a.transpose()(0, 1) == 3);
    CHECK((a - a).is_zero());
    CHECK((Scalar(1, 2) * a)(1, 1) == 2);
    CHECK(a.apply(Vec{1, 1}) == Vec{3, 7});
  }
}
