#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace mdist {

// Exact arbitrary-precision fraction. Always canonical: lowest terms,
// denominator > 0. Backed by GMP.
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(long numerator) : value_(numerator) {}  // NOLINT: implicit by design
  Rational(long numerator, long denominator);
  explicit Rational(mpq_class value);

  // Accepts "p/q", integers, and decimal literals ("0.25" -> 1/4),
  // with an optional leading sign.
  static Rational parse(std::string_view text);

  const mpq_class& raw() const { return value_; }

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  Rational abs() const { return Rational(mpq_class(::abs(value_))); }
  Rational inverse() const;              // errors on zero
  Rational pow(long exponent) const;     // negative exponent errors on zero

  std::string str() const;               // "p/q", or "p" when q == 1
  // Fixed-point rendering with `digits` fractional digits, round half away
  // from zero.
  std::string decimal(int digits) const;
  double to_double() const { return value_.get_d(); }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline Rational min(const Rational& a, const Rational& b) { return a <= b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a >= b ? a : b; }

}  // namespace mdist
