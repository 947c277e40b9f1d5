#pragma once

#include "agemo/matrix.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace agemo {

enum class Side { Left, Right };

inline Side flip(Side s) { return s == Side::Left ? Side::Right : Side::Left; }
inline const char* to_string(Side s) { return s == Side::Left ? "left" : "right"; }

struct InvalidAlgebra : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A finite-dimensional algebra given by structure constants in a fixed basis.
class Algebra {
public:
  Algebra(std::string name, Field f, std::vector<std::string> labels,
          std::vector<std::vector<Vec>> table, Vec unit, std::vector<Vec> idempotents,
          std::optional<std::vector<Vec>> radical = std::nullopt);

  const std::string& name() const { return name_; }
  Field field() const { return field_; }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  // Coordinates of b_i * b_j.
  const Vec& product(std::size_t i, std::size_t j) const { return table_[i][j]; }
  const Vec& unit() const { return unit_; }
  // False when the table, unit or idempotents have inconsistent sizes.
  bool well_formed() const { return left_.size() == dim(); }
  const std::vector<Vec>& idempotents() const { return idempotents_; }
  std::size_t vertex_count() const { return idempotents_.size(); }
  const std::optional<std::vector<Vec>>& supplied_radical() const { return supplied_radical_; }

  Vec multiply(std::span<const Scalar> a, std::span<const Scalar> b) const;
  Vec basis_vector(std::size_t i) const { return unit_vec(dim(), i, field_); }

  // Matrix of x -> b_i x (column j holds b_i b_j).
  const Matrix& left_mult(std::size_t i) const { return left_[i]; }
  // Matrix of x -> x b_i (column j holds b_j b_i).
  const Matrix& right_mult(std::size_t i) const { return right_[i]; }
  Matrix left_mult_by(std::span<const Scalar> a) const;
  Matrix right_mult_by(std::span<const Scalar> a) const;

  // Set by finalize(); columns span rad A.
  const Matrix& radical() const;
  bool has_radical() const { return radical_.has_value(); }

  // Index of the basis vector equal to the unit, if any.
  std::optional<std::size_t> unit_index() const;

private:
  friend std::shared_ptr<const Algebra> finalize(Algebra a);

  std::string name_;
  Field field_;
  std::vector<std::string> labels_;
  std::vector<std::vector<Vec>> table_;
  Vec unit_;
  std::vector<Vec> idempotents_;
  std::optional<std::vector<Vec>> supplied_radical_;
  std::vector<Matrix> left_, right_;
  std::optional<Matrix> radical_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

// Every violated invariant, one line each; empty iff valid.
std::vector<std::string> validate_algebra(const Algebra& a);

// Validates, computes the radical, and freezes the algebra. Throws InvalidAlgebra.
AlgebraPtr finalize(Algebra a);

Algebra opposite(const Algebra& a);
AlgebraPtr opposite(const AlgebraPtr& a);

// Supplied radical if present, otherwise the kernel of the trace form.
// Throws InvalidAlgebra when the characteristic is too small or the kernel is not nilpotent.
Matrix radical_basis(const Algebra& a);

// Coordinates of the product of two subspaces (columns), as a canonical column basis.
Matrix product_span(const Algebra& a, const Matrix& u, const Matrix& v);

bool is_local(const Algebra& a);

}  // namespace agemo
