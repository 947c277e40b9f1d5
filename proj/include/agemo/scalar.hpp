#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace agemo {

struct FieldMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The rationals (characteristic 0) or a prime field F_p.
class Field {
public:
  constexpr Field() = default;

  static constexpr Field rational() { return Field{}; }
  static Field prime(std::uint64_t p);

  constexpr bool is_rational() const { return p_ == 0; }
  constexpr std::uint64_t characteristic() const { return p_; }

  std::string to_string() const;
  // Accepts "Q", "QQ", "Fp" forms like "F7", "Fp7", "GF(7)".
  static Field parse(std::string_view text);

  friend constexpr bool operator==(Field a, Field b) { return a.p_ == b.p_; }

private:
  constexpr explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

// Exact field element. Rationals are kept canonical by GMP (positive
// denominator, gcd 1); prime-field elements are integers in [0, p).
class Scalar {
public:
  Scalar() = default;
  explicit Scalar(Field f) : field_(f) {}
  Scalar(Field f, long v);
  Scalar(Field f, const mpq_class& v);
  static Scalar parse(Field f, std::string_view text);

  Field field() const { return field_; }
  const mpq_class& value() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }

  Scalar operator-() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  // Values of different fields are never equal.
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.field_ == b.field_ && a.v_ == b.v_;
  }

  // Fused a -= b * c, the inner loop of elimination.
  void sub_mul(const Scalar& b, const Scalar& c);

  std::string to_string() const;

private:
  void check(const Scalar& o) const;
  void reduce();

  mpq_class v_{0};
  Field field_{};
};

}  // namespace agemo
