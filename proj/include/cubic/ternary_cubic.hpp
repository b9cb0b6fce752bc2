#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cubic/circulant.hpp"
#include "cubic/multipoly.hpp"

namespace cubic {

/// Variables a0, a1, a2 shared by every ternary form.
const VarSet& ternary_vars();

/// The ten exponent triples (i, j, k), i + j + k = 3, in descending
/// graded-lex order: a0^3, a0^2*a1, a0^2*a2, a0*a1^2, a0*a1*a2, a0*a2^2,
/// a1^3, a1^2*a2, a1*a2^2, a2^3.
const std::array<std::array<std::uint32_t, 3>, 10>& cubic_exponents();

/// Index of (i, j, k) in cubic_exponents(); throws std::out_of_range if
/// i + j + k != 3.
std::size_t cubic_slot(std::uint32_t i, std::uint32_t j, std::uint32_t k);

/// Ternary cubic form: ten coefficients on the degree-3 monomials.
template <Scalar S>
class TernaryCubic {
 public:
  TernaryCubic() { coeffs_.fill(S(0)); }
  explicit TernaryCubic(std::array<S, 10> coeffs) : coeffs_(std::move(coeffs)) {}

  /// Throws std::invalid_argument unless `p` is over a0, a1, a2 and
  /// homogeneous of degree 3 (or zero).
  static TernaryCubic from_poly(const MultiPoly<S>& p) {
    if (!(p.vars() == ternary_vars())) throw VarSetMismatch();
    if (!p.is_homogeneous(3)) throw std::invalid_argument("not a homogeneous cubic: " + to_string(p));
    TernaryCubic f;
    for (const auto& [m, c] : p.terms()) f.coeffs_[cubic_slot(m[0], m[1], m[2])] = c;
    return f;
  }

  MultiPoly<S> to_poly() const {
    MultiPoly<S> p(ternary_vars());
    for (std::size_t s = 0; s < 10; ++s) {
      const auto& e = cubic_exponents()[s];
      p.accumulate(Monomial({e[0], e[1], e[2]}), coeffs_[s]);
    }
    return p;
  }

  const std::array<S, 10>& coefficients() const { return coeffs_; }
  const S& coefficient(std::uint32_t i, std::uint32_t j, std::uint32_t k) const {
    return coeffs_[cubic_slot(i, j, k)];
  }
  void set_coefficient(std::uint32_t i, std::uint32_t j, std::uint32_t k, S value) {
    coeffs_[cubic_slot(i, j, k)] = std::move(value);
  }

  bool is_zero() const {
    for (const auto& c : coeffs_) {
      if (!c.is_zero()) return false;
    }
    return true;
  }

  S operator()(const Triple<S>& a) const {
    S total(0);
    for (std::size_t s = 0; s < 10; ++s) {
      const auto& e = cubic_exponents()[s];
      S t = coeffs_[s];
      for (std::size_t v = 0; v < 3; ++v) {
        for (std::uint32_t n = 0; n < e[v]; ++n) t = t * a[v];
      }
      total = total + t;
    }
    return total;
  }

  friend TernaryCubic operator+(const TernaryCubic& f, const TernaryCubic& g) {
    TernaryCubic out = f;
    for (std::size_t s = 0; s < 10; ++s) out.coeffs_[s] = out.coeffs_[s] + g.coeffs_[s];
    return out;
  }

  friend TernaryCubic operator*(const S& k, const TernaryCubic& f) {
    TernaryCubic out = f;
    for (auto& c : out.coeffs_) c = k * c;
    return out;
  }

  friend bool operator==(const TernaryCubic&, const TernaryCubic&) = default;
  friend auto operator<=>(const TernaryCubic& a, const TernaryCubic& b)
    requires std::three_way_comparable<S>
  {
    return a.coeffs_ <=> b.coeffs_;
  }

 private:
  std::array<S, 10> coeffs_;
};

template <Scalar S>
std::string to_string(const TernaryCubic<S>& f) {
  return to_string(f.to_poly());
}

/// a0^3 + a1^3 + a2^3 - 3 a0 a1 a2.
template <Scalar S>
TernaryCubic<S> ramanujan_form() {
  TernaryCubic<S> f;
  f.set_coefficient(3, 0, 0, S(1));
  f.set_coefficient(0, 3, 0, S(1));
  f.set_coefficient(0, 0, 3, S(1));
  f.set_coefficient(1, 1, 1, S(-3));
  return f;
}

/// Determinant of the matrix of second partials, computed symbolically
/// with differentiate and det3. The result is again a cubic form.
template <Scalar S>
TernaryCubic<S> hessian(const TernaryCubic<S>& f) {
  const MultiPoly<S> p = f.to_poly();
  const auto& vars = ternary_vars();
  std::array<MultiPoly<S>, 3> first{differentiate(p, vars.name(0)), differentiate(p, vars.name(1)),
                                     differentiate(p, vars.name(2))};
  Matrix3<MultiPoly<S>> second{{
      {differentiate(first[0], vars.name(0)), differentiate(first[0], vars.name(1)),
       differentiate(first[0], vars.name(2))},
      {differentiate(first[1], vars.name(0)), differentiate(first[1], vars.name(1)),
       differentiate(first[1], vars.name(2))},
      {differentiate(first[2], vars.name(0)), differentiate(first[2], vars.name(1)),
       differentiate(first[2], vars.name(2))},
  }};
  return TernaryCubic<S>::from_poly(det3(second));
}

/// Symmetric trilinear form stored by its 27 values on basis vectors.
template <Scalar S>
class TrilinearForm {
 public:
  using Values = std::array<std::array<std::array<S, 3>, 3>, 3>;

  explicit TrilinearForm(Values values) : values_(std::move(values)) {}

  const S& at(std::size_t i, std::size_t j, std::size_t k) const { return values_[i][j][k]; }
  const Values& values() const { return values_; }

  /// Trilinear extension: sum over i, j, k of T[i][j][k] a_i b_j c_k.
  S operator()(const Triple<S>& a, const Triple<S>& b, const Triple<S>& c) const {
    S total(0);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        for (std::size_t k = 0; k < 3; ++k) total = total + values_[i][j][k] * a[i] * b[j] * c[k];
      }
    }
    return total;
  }

  bool is_symmetric() const {
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        for (std::size_t k = 0; k < 3; ++k) {
          const S& v = values_[i][j][k];
          if (!(v == values_[i][k][j] && v == values_[j][i][k] && v == values_[j][k][i] &&
                v == values_[k][i][j] && v == values_[k][j][i])) {
            return false;
          }
        }
      }
    }
    return true;
  }

  friend TrilinearForm operator+(const TrilinearForm& x, const TrilinearForm& y) {
    Values v = x.values_;
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        for (std::size_t k = 0; k < 3; ++k) v[i][j][k] = v[i][j][k] + y.values_[i][j][k];
      }
    }
    return TrilinearForm(std::move(v));
  }

  friend bool operator==(const TrilinearForm&, const TrilinearForm&) = default;

 private:
  Values values_;
};

/// Inclusion-exclusion polarization
///   T(a,b,c) = f(a+b+c) - f(a+b) - f(a+c) - f(b+c) + f(a) + f(b) + f(c),
/// evaluated on basis vectors. No 1/6 normalization: T(a,a,a) = 6 f(a).
template <Scalar S>
TrilinearForm<S> polarize(const TernaryCubic<S>& f) {
  auto basis = [](std::size_t i) {
    Triple<S> e;
    e[i] = S(1);
    return e;
  };
  auto add = [](const Triple<S>& x, const Triple<S>& y) {
    return Triple<S>(x[0] + y[0], x[1] + y[1], x[2] + y[2]);
  };
  typename TrilinearForm<S>::Values values;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      for (std::size_t k = 0; k < 3; ++k) {
        const Triple<S> a = basis(i), b = basis(j), c = basis(k);
        values[i][j][k] = f(add(add(a, b), c)) - f(add(a, b)) - f(add(a, c)) - f(add(b, c)) + f(a) +
                          f(b) + f(c);
      }
    }
  }
  return TrilinearForm<S>(std::move(values));
}

struct NondegeneracyResult {
  bool nondegenerate = false;
  /// Basis of {a : T(a, b, c) = 0 for all b, c}; empty when nondegenerate.
  std::vector<Triple<Rational>> kernel;
};

/// Decides whether no nonzero a annihilates the polarization, by exact
/// elimination on the 9x3 matrix with rows (j, k) and entries T[i][j][k].
NondegeneracyResult nondegenerate(const TernaryCubic<Rational>& f);

enum class OrbitStatus { Degenerate, Cycle, Unresolved };

std::string to_string(OrbitStatus status);

struct OrbitReport {
  OrbitStatus status = OrbitStatus::Unresolved;
  /// Degenerate: iteration that produced the zero form. Cycle: index of the
  /// first repeated normalized form. Unresolved: steps taken.
  std::size_t step = 0;
  /// Cycle length; 0 unless status is Cycle.
  std::size_t period = 0;
  /// Content split off by normalization at each Hessian step.
  std::vector<Integer> contents;
  /// Normalized forms visited, starting with the normalized input.
  std::vector<TernaryCubic<Integer>> forms;
};

constexpr std::size_t kDefaultOrbitSteps = 64;

/// Primitive part with positive leading coefficient in graded-lex order.
/// The zero form normalizes to itself.
TernaryCubic<Integer> normalize(const TernaryCubic<Integer>& f);

/// Iterates g -> normalize(hessian(g)) from g_0 = normalize(f), stopping at
/// the zero form (Degenerate), at the first normalized form seen before
/// (Cycle), or after `max_steps` iterations (Unresolved). Throws
/// std::invalid_argument if max_steps is 0.
OrbitReport hessian_orbit(const TernaryCubic<Integer>& f, std::size_t max_steps = kDefaultOrbitSteps);

}  // namespace cubic
