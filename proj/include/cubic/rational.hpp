#pragma once

#include <compare>
#include <concepts>
#include <ostream>
#include <string>
#include <string_view>

#include "cubic/integer.hpp"

namespace cubic {

/// Exact fraction kept in lowest terms with a positive denominator, so
/// equality is structural.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  template <std::integral T>
  Rational(T value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(Integer value) : num_(std::move(value)), den_(1) {}  // NOLINT(google-explicit-constructor)
  /// Throws DivisionByZero when `den` is zero.
  Rational(Integer num, Integer den);

  /// Parses "p" or "p/q" with an optional sign on p.
  static Rational parse(std::string_view text);

  const Integer& num() const { return num_; }
  const Integer& den() const { return den_; }

  std::string to_string() const;

  int sign() const { return num_.sign(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_ == Integer(1); }
  /// Throws DomainMismatch unless the denominator is 1.
  const Integer& as_integer() const;

  /// Throws DivisionByZero on zero.
  Rational inverse() const;
  Rational abs() const { return Rational(num_.abs(), den_); }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  friend Rational operator-(const Rational& x) { return Rational(-x.num_, x.den_); }

  friend bool operator==(const Rational& lhs, const Rational& rhs) = default;
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

  std::size_t hash() const;

 private:
  void canonicalize();

  Integer num_;
  Integer den_;
};

Rational pow(const Rational& base, unsigned exponent);

std::ostream& operator<<(std::ostream& os, const Rational& x);
inline std::string to_string(const Rational& x) { return x.to_string(); }

}  // namespace cubic

template <>
struct std::hash<cubic::Rational> {
  std::size_t operator()(const cubic::Rational& x) const { return x.hash(); }
};
