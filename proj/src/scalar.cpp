#include "agemo/scalar.hpp"

#include <cctype>

namespace agemo {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("not a prime: " + std::to_string(p));
  return Field{p};
}

std::string Field::to_string() const {
  return is_rational() ? "Q" : "F" + std::to_string(p_);
}

Field Field::parse(std::string_view text) {
  if (text == "Q" || text == "QQ") return rational();
  std::string digits;
  for (char c : text)
    if (std::isdigit(static_cast<unsigned char>(c))) digits += c;
  bool prefix_ok = !text.empty() && (text[0] == 'F' || text.substr(0, 2) == "GF");
  if (!prefix_ok || digits.empty()) throw std::invalid_argument("unknown field: " + std::string(text));
  return prime(std::stoull(digits));
}

Scalar::Scalar(Field f, long v) : v_(v), field_(f) { reduce(); }

Scalar::Scalar(Field f, const mpq_class& v) : v_(v), field_(f) { reduce(); }

Scalar Scalar::parse(Field f, std::string_view text) {
  std::string s(text);
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0)
    throw std::invalid_argument("not a rational number: " + std::string(text));
  q.canonicalize();
  if (sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  return Scalar(f, q);
}

void Scalar::reduce() {
  if (field_.is_rational()) return;
  mpz_class p(static_cast<unsigned long>(field_.characteristic()));
  mpz_class num = v_.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = v_.get_den() % p;
  if (den == 0) throw std::domain_error("denominator divisible by the characteristic");
  if (den != 1) {
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    num = (num * inv) % p;
  }
  v_ = mpq_class(num);
}

void Scalar::check(const Scalar& o) const {
  if (!(field_ == o.field_))
    throw FieldMismatch("field mismatch: " + field_.to_string() + " vs " + o.field_.to_string());
}

Scalar Scalar::operator-() const {
  Scalar r(*this);
  r.v_ = -r.v_;
  r.reduce();
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  Scalar r(*this);
  if (field_.is_rational()) {
    r.v_ = 1 / v_;
  } else {
    mpz_class p(static_cast<unsigned long>(field_.characteristic()));
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), v_.get_num_mpz_t(), p.get_mpz_t());
    r.v_ = mpq_class(inv);
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check(o);
  v_ += o.v_;
  if (!field_.is_rational()) reduce();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check(o);
  v_ -= o.v_;
  if (!field_.is_rational()) reduce();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check(o);
  v_ *= o.v_;
  if (!field_.is_rational()) reduce();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check(o);
  return *this *= o.inverse();
}

void Scalar::sub_mul(const Scalar& b, const Scalar& c) {
  check(b);
  check(c);
  if (field_.is_rational()) {
    // mpq has no fused submul; a single temporary keeps allocations down.
    thread_local mpq_class tmp;
    mpq_mul(tmp.get_mpq_t(), b.v_.get_mpq_t(), c.v_.get_mpq_t());
    mpq_sub(v_.get_mpq_t(), v_.get_mpq_t(), tmp.get_mpq_t());
  } else {
    v_ -= b.v_ * c.v_;
    reduce();
  }
}

std::string Scalar::to_string() const { return v_.get_str(); }

}  // namespace agemo
