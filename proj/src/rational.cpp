#include "cubic/rational.hpp"

#include "cubic/errors.hpp"

namespace cubic {

Rational::Rational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero();
  canonicalize();
}

void Rational::canonicalize() {
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  const Integer g = gcd(num_, den_);
  if (g != Integer(1)) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(Integer::parse(text));
  const Integer num = Integer::parse(text.substr(0, slash));
  const std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw ParseError("denominator must be unsigned", slash + 1);
  }
  Integer den;
  try {
    den = Integer::parse(den_text);
  } catch (const ParseError& e) {
    throw ParseError("malformed denominator", slash + 1 + e.position());
  }
  if (den.is_zero()) throw ParseError("zero denominator", slash + 1);
  return Rational(num, den);
}

std::string Rational::to_string() const {
  if (is_integer()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

const Integer& Rational::as_integer() const {
  if (!is_integer()) throw DomainMismatch(to_string() + " is not an integer");
  return num_;
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return Rational(den_, num_);
}

Rational& Rational::operator+=(const Rational& rhs) {
  num_ = num_ * rhs.den_ + rhs.num_ * den_;
  den_ *= rhs.den_;
  canonicalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  num_ = num_ * rhs.den_ - rhs.num_ * den_;
  den_ *= rhs.den_;
  canonicalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  canonicalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DivisionByZero();
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  canonicalize();
  return *this;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  return lhs.num_ * rhs.den_ <=> rhs.num_ * lhs.den_;
}

std::size_t Rational::hash() const {
  const std::size_t h = num_.hash();
  return h ^ (den_.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

Rational pow(const Rational& base, unsigned exponent) {
  return Rational(pow(base.num(), exponent), pow(base.den(), exponent));
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

}  // namespace cubic
