#pragma once

#include <array>
#include <string>

#include "cubic/errors.hpp"
#include "cubic/multipoly.hpp"
#include "cubic/scalar.hpp"

namespace cubic {

/// Element (a0, a1, a2) of the 3-dimensional circulant algebra. Every
/// triple is a legal element, including zero divisors.
template <Scalar S>
struct Triple {
  std::array<S, 3> c{S(0), S(0), S(0)};

  Triple() = default;
  Triple(S a0, S a1, S a2) : c{std::move(a0), std::move(a1), std::move(a2)} {}

  static Triple one() { return {S(1), S(0), S(0)}; }

  const S& operator[](std::size_t i) const { return c[i]; }
  S& operator[](std::size_t i) { return c[i]; }

  bool is_zero() const { return c[0].is_zero() && c[1].is_zero() && c[2].is_zero(); }
  S trace() const { return c[0] + c[1] + c[2]; }
  bool is_diagonal() const { return c[0] == c[1] && c[1] == c[2]; }

  friend bool operator==(const Triple&, const Triple&) = default;
};

/// "a0,a1,a2" with no spaces.
template <Scalar S>
std::string to_string(const Triple<S>& t) {
  return to_string(t[0]) + "," + to_string(t[1]) + "," + to_string(t[2]);
}

/// Parses "a0,a1,a2" of exact scalars ("1/2,-1,0"). Throws ParseError.
Triple<Rational> parse_triple(std::string_view text);

template <Scalar T, Scalar S>
Triple<T> convert_triple(const Triple<S>& t) {
  return {T(t[0]), T(t[1]), T(t[2])};
}

/// Ramanujan's bilinear composition: the first row of A(a) A(b).
///   c0 = a0 b0 + a1 b2 + a2 b1
///   c1 = a0 b1 + a1 b0 + a2 b2
///   c2 = a0 b2 + a1 b1 + a2 b0
template <Scalar S>
Triple<S> compose(const Triple<S>& a, const Triple<S>& b) {
  return {a[0] * b[0] + a[1] * b[2] + a[2] * b[1],
          a[0] * b[1] + a[1] * b[0] + a[2] * b[2],
          a[0] * b[2] + a[1] * b[1] + a[2] * b[0]};
}

/// C(a) = a0^3 + a1^3 + a2^3 - 3 a0 a1 a2, multiplicative under compose.
template <Scalar S>
S cubic_norm(const Triple<S>& a) {
  return a[0] * a[0] * a[0] + a[1] * a[1] * a[1] + a[2] * a[2] * a[2] - S(3) * a[0] * a[1] * a[2];
}

/// Circulant matrix whose rows are successive cyclic right-shifts of
/// (a0, a1, a2).
template <Scalar S>
class CirculantMatrix {
 public:
  explicit CirculantMatrix(const Triple<S>& a)
      : rows_{{{a[0], a[1], a[2]}, {a[2], a[0], a[1]}, {a[1], a[2], a[0]}}} {}

  const Matrix3<S>& rows() const { return rows_; }
  const S& operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }
  Triple<S> first_row() const { return {rows_[0][0], rows_[0][1], rows_[0][2]}; }
  S determinant() const { return det3(rows_); }

  friend bool operator==(const CirculantMatrix&, const CirculantMatrix&) = default;

 private:
  Matrix3<S> rows_;
};

template <Scalar S>
CirculantMatrix<S> to_matrix(const Triple<S>& a) {
  return CirculantMatrix<S>(a);
}

/// Eigenvalues of A(a), the three linear factors of C over Q(w):
/// (a0 + a1 + a2, a0 + w a1 + w^2 a2, a0 + w^2 a1 + w a2).
/// Their product is C(a) and the last two are Galois conjugates.
template <Scalar S>
std::array<EisensteinRational, 3> eigenvalues(const Triple<S>& a) {
  const EisensteinRational a0(a[0]), a1(a[1]), a2(a[2]);
  const auto w = EisensteinRational::omega();
  const auto w2 = EisensteinRational::omega_squared();
  return {a0 + a1 + a2, a0 + w * a1 + w2 * a2, a0 + w2 * a1 + w * a2};
}

/// Inverse under compose, from the adjugate of A(a):
/// ((a0^2 - a1 a2), (a2^2 - a0 a1), (a1^2 - a0 a2)) / C(a).
/// Throws SingularElement when C(a) = 0.
Triple<Rational> invert(const Triple<Rational>& a);

enum class ZeroDivisorClass { NotZeroDivisor, TraceZeroPlane, DiagonalLine, Zero };

std::string to_string(ZeroDivisorClass tag);

/// Set of b with compose(a, b) = 0.
enum class AnnihilatorKind {
  Trivial,     // {0}
  Line,        // scalar multiples of `vector`
  Plane,       // {b : b . vector = 0}
  Everything,  // all triples (a = 0)
};

std::string to_string(AnnihilatorKind kind);

struct Annihilator {
  AnnihilatorKind kind = AnnihilatorKind::Trivial;
  Triple<Rational> vector;

  /// Membership test against the description.
  template <Scalar S>
  bool contains(const Triple<S>& b) const {
    switch (kind) {
      case AnnihilatorKind::Trivial:
        return b.is_zero();
      case AnnihilatorKind::Line:  // vector is (1,1,1)
        return b.is_diagonal();
      case AnnihilatorKind::Plane:
        return b.trace().is_zero();
      case AnnihilatorKind::Everything:
        return true;
    }
    return false;
  }

  friend bool operator==(const Annihilator&, const Annihilator&) = default;
};

struct ZeroDivisorInfo {
  ZeroDivisorClass tag = ZeroDivisorClass::NotZeroDivisor;
  Annihilator annihilator;

  friend bool operator==(const ZeroDivisorInfo&, const ZeroDivisorInfo&) = default;
};

/// Zero-divisor classification over exact (rational) scalars. A nonzero
/// element is a zero divisor iff it lies on the trace-zero plane, whose
/// annihilator is the diagonal line, or on the diagonal line, whose
/// annihilator is the trace-zero plane.
template <Scalar S>
ZeroDivisorInfo classify_zero_divisor(const Triple<S>& a) {
  const Triple<Rational> diagonal(1, 1, 1);
  if (a.is_zero()) return {ZeroDivisorClass::Zero, {AnnihilatorKind::Everything, {}}};
  if (a.trace().is_zero()) return {ZeroDivisorClass::TraceZeroPlane, {AnnihilatorKind::Line, diagonal}};
  if (a.is_diagonal()) return {ZeroDivisorClass::DiagonalLine, {AnnihilatorKind::Plane, diagonal}};
  return {ZeroDivisorClass::NotZeroDivisor, {AnnihilatorKind::Trivial, {}}};
}

}  // namespace cubic
