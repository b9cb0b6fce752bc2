#pragma once

#include <concepts>
#include <ostream>
#include <string>

#include "cubic/rational.hpp"

namespace cubic {

/// Element x + y*w of Q(w), where w is a primitive cube root of unity.
///
/// Stored in the basis {1, w}; products reduce with w^2 = -1 - w, so every
/// operation stays inside the rationals.
class EisensteinRational {
 public:
  EisensteinRational() = default;
  template <std::integral T>
  EisensteinRational(T value) : x_(value) {}  // NOLINT(google-explicit-constructor)
  EisensteinRational(Integer x) : x_(std::move(x)) {}  // NOLINT(google-explicit-constructor)
  EisensteinRational(Rational x) : x_(std::move(x)) {}  // NOLINT(google-explicit-constructor)
  EisensteinRational(Rational x, Rational y) : x_(std::move(x)), y_(std::move(y)) {}

  static EisensteinRational omega() { return {Rational(0), Rational(1)}; }
  static EisensteinRational omega_squared() { return {Rational(-1), Rational(-1)}; }

  const Rational& x() const { return x_; }
  const Rational& y() const { return y_; }

  bool is_zero() const { return x_.is_zero() && y_.is_zero(); }
  bool is_rational() const { return y_.is_zero(); }

  /// Galois conjugate, swapping w and w^2: (x - y) - y*w.
  EisensteinRational conj() const { return {x_ - y_, -y_}; }
  /// Field norm x^2 - x*y + y^2, equal to a * conj(a).
  Rational norm() const { return x_ * x_ - x_ * y_ + y_ * y_; }
  /// Throws DivisionByZero on zero.
  EisensteinRational inverse() const;

  /// "x + y*w", or "x - |y|*w" when y is negative.
  std::string to_string() const;

  EisensteinRational& operator+=(const EisensteinRational& rhs);
  EisensteinRational& operator-=(const EisensteinRational& rhs);
  EisensteinRational& operator*=(const EisensteinRational& rhs);
  EisensteinRational& operator/=(const EisensteinRational& rhs) { return *this *= rhs.inverse(); }

  friend EisensteinRational operator+(EisensteinRational a, const EisensteinRational& b) { return a += b; }
  friend EisensteinRational operator-(EisensteinRational a, const EisensteinRational& b) { return a -= b; }
  friend EisensteinRational operator*(EisensteinRational a, const EisensteinRational& b) { return a *= b; }
  friend EisensteinRational operator/(EisensteinRational a, const EisensteinRational& b) { return a /= b; }
  friend EisensteinRational operator-(const EisensteinRational& a) { return {-a.x_, -a.y_}; }

  friend bool operator==(const EisensteinRational&, const EisensteinRational&) = default;

 private:
  Rational x_;
  Rational y_;
};

std::ostream& operator<<(std::ostream& os, const EisensteinRational& a);
inline std::string to_string(const EisensteinRational& a) { return a.to_string(); }

}  // namespace cubic
