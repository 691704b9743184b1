#include "greengb/rational.hpp"

#include <ostream>

#include "greengb/errors.hpp"

namespace greengb {

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) {
    throw std::invalid_argument("Rational: zero denominator");
  }
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
      if (c < '0' || c > '9') return false;
    }
    return true;
  };

  std::string num;
  std::string den = "1";
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    num = std::string(text);
  } else {
    num = std::string(text.substr(0, slash));
    den = std::string(text.substr(slash + 1));
  }
  if (!is_int(num) || !is_int(den)) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  const mpz_class n(num);
  const mpz_class d(den);
  if (d == 0) {
    throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  if (sgn(d) < 0) {
    throw ParseError("negative denominator in '" + std::string(text) + "'");
  }
  mpq_class v(n, d);
  v.canonicalize();
  Rational r;
  r.value_ = std::move(v);
  return r;
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) {
    throw std::invalid_argument("Rational: division by zero");
  }
  value_ /= other.value_;
  return *this;
}

Rational Rational::reciprocal() const {
  if (is_zero()) {
    throw std::invalid_argument("Rational: reciprocal of zero");
  }
  Rational r;
  r.value_ = 1 / value_;
  return r;
}

std::string Rational::to_string() const {
  std::string s = value_.get_num().get_str();
  if (value_.get_den() != 1) {
    s += "/" + value_.get_den().get_str();
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace greengb
