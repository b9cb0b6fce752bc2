#pragma once

#include <concepts>
#include <string>

#include "cubic/eisenstein.hpp"
#include "cubic/integer.hpp"
#include "cubic/rational.hpp"

namespace cubic {

/// The commutative-ring contract every generic algorithm in this library is
/// written against. Zero and one are `S(0)` and `S(1)`.
template <class S>
concept Scalar = std::regular<S> && std::constructible_from<S, int> &&
                 requires(const S& a, const S& b) {
                   { a + b } -> std::same_as<S>;
                   { a - b } -> std::same_as<S>;
                   { a * b } -> std::same_as<S>;
                   { -a } -> std::same_as<S>;
                   { a.is_zero() } -> std::convertible_to<bool>;
                   { to_string(a) } -> std::same_as<std::string>;
                 };

/// Scalars with a sign. Polynomial formatting uses it to print
/// subtraction instead of adding negative coefficients.
template <class S>
concept OrderedScalar = Scalar<S> && requires(const S& a) {
  { a.sign() } -> std::convertible_to<int>;
  { a.abs() } -> std::same_as<S>;
};

/// Exact conversion from a rational literal into the coefficient ring S.
/// Throws DomainMismatch when the value has no image in S.
template <Scalar S>
S scalar_from_rational(const Rational& r);

template <>
inline Integer scalar_from_rational<Integer>(const Rational& r) {
  return r.as_integer();
}

template <>
inline Rational scalar_from_rational<Rational>(const Rational& r) {
  return r;
}

template <>
inline EisensteinRational scalar_from_rational<EisensteinRational>(const Rational& r) {
  return EisensteinRational(r);
}

}  // namespace cubic
