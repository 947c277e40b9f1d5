#pragma once

#include "agemo/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace agemo {

using Vec = std::vector<Scalar>;

Vec zero_vec(std::size_t n, Field f);
Vec unit_vec(std::size_t n, std::size_t i, Field f);
bool is_zero(std::span<const Scalar> v);

// Dense row-major matrix over a single exact field.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Field f);

  static Matrix identity(std::size_t n, Field f);
  static Matrix from_ints(std::initializer_list<std::initializer_list<long>> rows,
                          Field f = Field::rational());
  // Columns given as vectors of length `rows`.
  static Matrix from_columns(std::size_t rows, const std::vector<Vec>& cols, Field f);
  static Matrix from_rows(std::size_t cols, const std::vector<Vec>& rows, Field f);
  static Matrix column(const Vec& v, Field f);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Field field() const { return field_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Scalar> row_span(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  const Vec& data() const { return data_; }

  Vec col(std::size_t c) const;
  Vec row(std::size_t r) const;
  std::vector<Vec> columns() const;

  Matrix transpose() const;
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  Matrix select_columns(std::span<const std::size_t> idx) const;
  Matrix select_rows(std::span<const std::size_t> idx) const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& m);

  Vec apply(std::span<const Scalar> v) const;
  Matrix scaled(const Scalar& s) const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

  std::string to_string() const;

private:
  std::size_t rows_ = 0, cols_ = 0;
  Field field_{};
  Vec data_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix block_diagonal(std::span<const Matrix> blocks, Field f);

struct Rref {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

Rref rref(const Matrix& m);
std::size_t rank(const Matrix& m);
// Columns span the null space; one column per free variable, in rref order.
Matrix kernel_basis(const Matrix& m);
// X with m * X = rhs (free variables set to zero), or nullopt if inconsistent.
std::optional<Matrix> solve(const Matrix& m, const Matrix& rhs);
std::optional<Matrix> inverse(const Matrix& m);
Scalar determinant(const Matrix& m);
// Canonical basis (as columns) of the column space: transposed nonzero rows of rref(m^T).
Matrix column_space_basis(const Matrix& m);
// Characteristic polynomial det(tI - m), coefficients from degree 0 up to n.
std::vector<Scalar> charpoly(const Matrix& m);

// Expresses vectors in a fixed basis (columns of `basis`, assumed independent).
class CoordinateSystem {
public:
  explicit CoordinateSystem(const Matrix& basis);
  std::size_t dim() const { return dim_; }
  std::size_t ambient() const { return ambient_; }
  // Coordinates of v, or nullopt if v is outside the span.
  std::optional<Vec> coordinates(std::span<const Scalar> v) const;
  // Coordinates of every column of m; throws if some column lies outside.
  Matrix coordinates_of(const Matrix& m) const;

private:
  std::size_t dim_ = 0, ambient_ = 0;
  Field field_{};
  // Row operations bringing basis to rref, recorded as the transform T with T*basis = rref.
  Matrix transform_;
  std::vector<std::size_t> pivots_;
};

// Grows a basis one vector at a time; membership tests reduce against the stored rows.
class IncrementalBasis {
public:
  IncrementalBasis(std::size_t n, Field f) : n_(n), field_(f) {}
  // Inserts v if it is independent of the stored vectors; returns whether it was inserted.
  bool add(std::span<const Scalar> v);
  bool contains(std::span<const Scalar> v) const;
  std::size_t rank() const { return rows_.size(); }
  std::size_t ambient() const { return n_; }

private:
  Vec reduce(std::span<const Scalar> v) const;
  std::size_t n_;
  Field field_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace agemo
