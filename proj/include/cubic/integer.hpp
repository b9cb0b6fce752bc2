#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace cubic {

/// Arbitrary-precision signed integer.
class Integer {
 public:
  Integer() = default;
  template <std::integral T>
  Integer(T value) : value_(value) {}  // NOLINT(google-explicit-constructor)

  /// Parses an optionally signed decimal string ("-3", "+12").
  static Integer parse(std::string_view text);

  std::string to_string() const;

  int sign() const { return value_.sign(); }
  bool is_zero() const { return value_.is_zero(); }
  bool fits_int64() const;
  /// Throws DomainMismatch when the value does not fit.
  std::int64_t to_int64() const;

  Integer abs() const;

  Integer& operator+=(const Integer& rhs);
  Integer& operator-=(const Integer& rhs);
  Integer& operator*=(const Integer& rhs);

  friend Integer operator+(Integer lhs, const Integer& rhs) { return lhs += rhs; }
  friend Integer operator-(Integer lhs, const Integer& rhs) { return lhs -= rhs; }
  friend Integer operator*(Integer lhs, const Integer& rhs) { return lhs *= rhs; }
  friend Integer operator-(const Integer& x);

  /// Truncating division; throws DivisionByZero.
  friend Integer operator/(const Integer& lhs, const Integer& rhs);
  friend Integer operator%(const Integer& lhs, const Integer& rhs);

  friend bool operator==(const Integer& lhs, const Integer& rhs) = default;
  friend std::strong_ordering operator<=>(const Integer& lhs, const Integer& rhs);

  /// Non-negative gcd; gcd(0, 0) = 0.
  friend Integer gcd(const Integer& a, const Integer& b);

  std::size_t hash() const;

 private:
  using Rep = boost::multiprecision::cpp_int;
  explicit Integer(Rep value) : value_(std::move(value)) {}

  Rep value_;
};

Integer pow(const Integer& base, unsigned exponent);

std::ostream& operator<<(std::ostream& os, const Integer& x);
inline std::string to_string(const Integer& x) { return x.to_string(); }

}  // namespace cubic

template <>
struct std::hash<cubic::Integer> {
  std::size_t operator()(const cubic::Integer& x) const { return x.hash(); }
};
