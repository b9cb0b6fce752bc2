#include "cubic/integer.hpp"

#include <cctype>
#include <limits>

#include <boost/functional/hash.hpp>

#include "cubic/errors.hpp"

namespace cubic {

Integer Integer::parse(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) throw ParseError("expected digits", pos);
  Rep value = 0;
  for (; pos < text.size(); ++pos) {
    const char ch = text[pos];
    if (!std::isdigit(static_cast<unsigned char>(ch))) throw ParseError("expected digit", pos);
    value = value * 10 + (ch - '0');
  }
  return Integer(negative ? Rep(-value) : value);
}

std::string Integer::to_string() const { return value_.str(); }

bool Integer::fits_int64() const {
  return value_ >= std::numeric_limits<std::int64_t>::min() &&
         value_ <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t Integer::to_int64() const {
  if (!fits_int64()) throw DomainMismatch("integer " + to_string() + " does not fit in 64 bits");
  return value_.convert_to<std::int64_t>();
}

Integer Integer::abs() const { return Integer(Rep(boost::multiprecision::abs(value_))); }

Integer& Integer::operator+=(const Integer& rhs) {
  value_ += rhs.value_;
  return *this;
}

Integer& Integer::operator-=(const Integer& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Integer& Integer::operator*=(const Integer& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Integer operator-(const Integer& x) { return Integer(Integer::Rep(-x.value_)); }

Integer operator/(const Integer& lhs, const Integer& rhs) {
  if (rhs.is_zero()) throw DivisionByZero();
  return Integer(Integer::Rep(lhs.value_ / rhs.value_));
}

Integer operator%(const Integer& lhs, const Integer& rhs) {
  if (rhs.is_zero()) throw DivisionByZero();
  return Integer(Integer::Rep(lhs.value_ % rhs.value_));
}

std::strong_ordering operator<=>(const Integer& lhs, const Integer& rhs) {
  const int c = lhs.value_.compare(rhs.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Integer gcd(const Integer& a, const Integer& b) {
  return Integer(Integer::Rep(boost::multiprecision::gcd(a.value_, b.value_)));
}

std::size_t Integer::hash() const { return boost::hash<Rep>{}(value_); }

Integer pow(const Integer& base, unsigned exponent) {
  Integer result = 1;
  Integer b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const Integer& x) { return os << x.to_string(); }

}  // namespace cubic
