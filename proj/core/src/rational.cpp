#include "mdist/rational.hpp"

#include <cctype>
#include <ostream>

#include "mdist/errors.hpp"

namespace mdist {

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw DomainError("rational: zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("rational: division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw DomainError("rational: inverse of zero");
  return Rational(mpq_class(1) / value_);
}

Rational Rational::pow(long exponent) const {
  if (exponent == 0) return Rational(1);
  if (is_zero() && exponent < 0) throw DomainError("rational: 0 to a negative power");
  const unsigned long e = exponent < 0 ? -static_cast<unsigned long>(exponent) : exponent;
  mpq_class out;
  mpz_pow_ui(out.get_num_mpz_t(), value_.get_num_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), value_.get_den_mpz_t(), e);
  out.canonicalize();
  Rational r{std::move(out)};
  return exponent < 0 ? r.inverse() : r;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

mpz_class parse_mpz(std::string_view digits) {
  return mpz_class(std::string(digits), 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  // trim
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw ParseError("rational: empty string");

  bool negative = false;
  if (text.front() == '+' || text.front() == '-') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) throw ParseError("rational: sign without digits");

  mpq_class value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw ParseError("rational: malformed fraction '" + std::string(text) + "'");
    mpz_class d = parse_mpz(den);
    if (d == 0) throw ParseError("rational: zero denominator in '" + std::string(text) + "'");
    value = mpq_class(parse_mpz(num), d);
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    auto whole = text.substr(0, dot);
    auto frac = text.substr(dot + 1);
    if (whole.empty() && frac.empty())
      throw ParseError("rational: malformed decimal '" + std::string(text) + "'");
    if (!whole.empty() && !all_digits(whole))
      throw ParseError("rational: malformed decimal '" + std::string(text) + "'");
    if (!frac.empty() && !all_digits(frac))
      throw ParseError("rational: malformed decimal '" + std::string(text) + "'");
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class num = (whole.empty() ? mpz_class(0) : parse_mpz(whole)) * scale +
                    (frac.empty() ? mpz_class(0) : parse_mpz(frac));
    value = mpq_class(num, scale);
  } else {
    if (!all_digits(text)) throw ParseError("rational: malformed number '" + std::string(text) + "'");
    value = mpq_class(parse_mpz(text));
  }
  value.canonicalize();
  if (negative) value = -value;
  return Rational(std::move(value));
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::decimal(int digits) const {
  if (digits < 0) throw DomainError("rational: negative digit count");
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  // round(|v| * scale) with ties away from zero
  mpz_class num = ::abs(value_.get_num()) * scale * 2 + value_.get_den();
  mpz_class scaled = num / (value_.get_den() * 2);
  std::string body = scaled.get_str();
  std::string out = sign() < 0 ? "-" : "";
  if (digits == 0) return out + body;
  if (body.size() <= static_cast<size_t>(digits))
    body.insert(0, static_cast<size_t>(digits) + 1 - body.size(), '0');
  body.insert(body.size() - static_cast<size_t>(digits), ".");
  return out + body;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace mdist
