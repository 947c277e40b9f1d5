#include "agemo/matrix.hpp"

#include <doctest.h>

using namespace agemo;

TEST_SUITE("linear") {
  TEST_CASE("rational scalars stay canonical") {
    Field q = Field::rational();
    Scalar a = Scalar::parse(q, "6/-4");
    CHECK(a.to_string() == "-3/2");
    CHECK((a * Scalar(q, 2) + Scalar(q, 3)).is_zero());
    CHECK(a.inverse() == Scalar::parse(q, "-2/3"));
    CHECK_THROWS(Scalar(q, 0).inverse());
  }

  TEST_CASE("prime field arithmetic") {
    Field f = Field::prime(7);
    CHECK(Scalar(f, -1).to_string() == "6");
    CHECK((Scalar(f, 3) * Scalar(f, 5)) == Scalar(f, 1));
    CHECK(Scalar(f, 3).inverse() == Scalar(f, 5));
    CHECK(Scalar::parse(f, "1/2") == Scalar(f, 4));
    CHECK_THROWS_AS(Scalar(f, 1) + Scalar(Field::rational(), 1), FieldMismatch);
    CHECK_THROWS(Field::prime(8));
    CHECK(Field::parse("F5") == Field::prime(5));
  }

  TEST_CASE("rank, kernel and inverse") {
    Matrix m = Matrix::from_ints({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
    CHECK(rank(m) == 2);
    Matrix k = kernel_basis(m);
    REQUIRE(k.cols() == 1);
    CHECK((m * k).is_zero());
    CHECK(determinant(m).is_zero());
    CHECK_FALSE(inverse(m).has_value());
    Matrix g = Matrix::from_ints({{2, 1}, {7, 4}});
    CHECK(determinant(g) == Scalar(Field::rational(), 1));
    CHECK(*inverse(g) == Matrix::from_ints({{4, -1}, {-7, 2}}));
  }

  TEST_CASE("column space basis is canonical") {
    Matrix a = Matrix::from_ints({{1, 2}, {1, 2}, {0, 1}});
    Matrix b = Matrix::from_ints({{3, 1}, {3, 1}, {1, 0}});
    CHECK(column_space_basis(a) == column_space_basis(b));
  }

  TEST_CASE("characteristic polynomial") {
    // [[2,1],[0,3]] has det(tI - m) = t^2 - 5t + 6.
    auto p = charpoly(Matrix::from_ints({{2, 1}, {0, 3}}));
    Field q = Field::rational();
    REQUIRE(p.size() == 3);
    CHECK(p[0] == Scalar(q, 6));
    CHECK(p[1] == Scalar(q, -5));
    CHECK(p[2] == Scalar(q, 1));
  }

  TEST_CASE("solve") {
    Matrix m = Matrix::from_ints({{1, 1}, {0, 1}});
    auto x = solve(m, Matrix::from_ints({{3}, {1}}));
    REQUIRE(x);
    CHECK(*x == Matrix::from_ints({{2}, {1}}));
    CHECK_FALSE(solve(Matrix::from_ints({{1, 1}, {1, 1}}), Matrix::from_ints({{1}, {2}})).has_value());
  }
}
