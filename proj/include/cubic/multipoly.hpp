#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cubic/errors.hpp"
#include "cubic/scalar.hpp"

namespace cubic {

/// Ordered list of distinct variable names. The order is the variable order
/// of the graded-lex monomial ordering and never changes after creation.
/// Copies share storage.
class VarSet {
 public:
  VarSet(std::initializer_list<std::string> names);
  explicit VarSet(std::vector<std::string> names);

  std::size_t size() const { return names_->size(); }
  const std::string& name(std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const { return *names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  /// Like index_of but throws UnknownVariable.
  std::size_t require(std::string_view name) const;

  friend bool operator==(const VarSet& lhs, const VarSet& rhs);

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

/// Exponent vector, one entry per variable of a VarSet.
class Monomial {
 public:
  explicit Monomial(std::size_t num_vars) : exps_(num_vars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps);

  std::size_t size() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t degree() const { return degree_; }
  std::span<const std::uint32_t> exponents() const { return exps_; }

  Monomial operator*(const Monomial& rhs) const;
  /// Copy with exponent `i` replaced by `value`.
  Monomial with_exponent(std::size_t i, std::uint32_t value) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint32_t> exps_;
  std::uint32_t degree_ = 0;
};

/// Strict weak order placing monomials in descending graded-lex order:
/// higher total degree first, ties broken lexicographically by exponent
/// with the first variable most significant.
struct GradedLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// "a0^2*a1"; the empty monomial formats as "1".
std::string format_monomial(const Monomial& m, const VarSet& vars);

/// Sparse multivariate polynomial over the coefficient ring S.
///
/// Terms are kept in a map ordered by GradedLexGreater with no zero
/// coefficients stored, so two polynomials are equal exactly when their
/// term maps are. Binary operations throw VarSetMismatch when the operands
/// live over different variable sets.
template <Scalar S>
class MultiPoly {
 public:
  using Terms = std::map<Monomial, S, GradedLexGreater>;

  explicit MultiPoly(VarSet vars) : vars_(std::move(vars)) {}

  static MultiPoly constant(VarSet vars, const S& value) {
    MultiPoly p(std::move(vars));
    p.accumulate(Monomial(p.vars_.size()), value);
    return p;
  }

  static MultiPoly variable(VarSet vars, std::string_view name) {
    MultiPoly p(std::move(vars));
    Monomial m(p.vars_.size());
    p.accumulate(m.with_exponent(p.vars_.require(name), 1), S(1));
    return p;
  }

  static MultiPoly term(VarSet vars, Monomial m, const S& coefficient) {
    MultiPoly p(std::move(vars));
    if (m.size() != p.vars_.size()) throw VarSetMismatch();
    p.accumulate(std::move(m), coefficient);
    return p;
  }

  const VarSet& vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Total degree; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.degree()); }

  bool is_homogeneous(std::uint32_t d) const {
    for (const auto& [m, c] : terms_) {
      if (m.degree() != d) return false;
    }
    return true;
  }

  S coefficient(const Monomial& m) const {
    const auto it = terms_.find(m);
    return it == terms_.end() ? S(0) : it->second;
  }

  /// Coefficient of the greatest monomial; zero for the zero polynomial.
  S leading_coefficient() const { return terms_.empty() ? S(0) : terms_.begin()->second; }

  /// Adds `c * m` in place.
  void accumulate(const Monomial& m, const S& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  MultiPoly& operator+=(const MultiPoly& rhs) {
    check_same_vars(rhs);
    for (const auto& [m, c] : rhs.terms_) accumulate(m, c);
    return *this;
  }

  MultiPoly& operator-=(const MultiPoly& rhs) {
    check_same_vars(rhs);
    for (const auto& [m, c] : rhs.terms_) accumulate(m, -c);
    return *this;
  }

  friend MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) { return lhs += rhs; }
  friend MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) { return lhs -= rhs; }

  friend MultiPoly operator-(const MultiPoly& p) {
    MultiPoly out(p.vars_);
    for (const auto& [m, c] : p.terms_) out.terms_.emplace_hint(out.terms_.end(), m, -c);
    return out;
  }

  friend MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs) {
    lhs.check_same_vars(rhs);
    MultiPoly out(lhs.vars_);
    for (const auto& [m1, c1] : lhs.terms_) {
      for (const auto& [m2, c2] : rhs.terms_) out.accumulate(m1 * m2, c1 * c2);
    }
    return out;
  }

  friend MultiPoly operator*(const MultiPoly& p, const S& s) {
    MultiPoly out(p.vars_);
    if (s.is_zero()) return out;
    for (const auto& [m, c] : p.terms_) out.accumulate(m, c * s);
    return out;
  }
  friend MultiPoly operator*(const S& s, const MultiPoly& p) { return p * s; }

  MultiPoly& operator*=(const MultiPoly& rhs) { return *this = *this * rhs; }

  friend bool operator==(const MultiPoly& lhs, const MultiPoly& rhs) {
    return lhs.vars_ == rhs.vars_ && lhs.terms_ == rhs.terms_;
  }

 private:
  void check_same_vars(const MultiPoly& other) const {
    if (!(vars_ == other.vars_)) throw VarSetMismatch();
  }

  VarSet vars_;
  Terms terms_;
};

template <Scalar S>
MultiPoly<S> pow(const MultiPoly<S>& base, unsigned exponent) {
  MultiPoly<S> result = MultiPoly<S>::constant(base.vars(), S(1));
  MultiPoly<S> b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

/// Formal partial derivative with respect to `var`.
template <Scalar S>
MultiPoly<S> differentiate(const MultiPoly<S>& p, std::string_view var) {
  const std::size_t i = p.vars().require(var);
  MultiPoly<S> out(p.vars());
  for (const auto& [m, c] : p.terms()) {
    const std::uint32_t e = m[i];
    if (e == 0) continue;
    out.accumulate(m.with_exponent(i, e - 1), c * S(static_cast<int>(e)));
  }
  return out;
}

/// Evaluates `p` at a point given positionally, one value per variable.
template <Scalar S>
S evaluate(const MultiPoly<S>& p, std::span<const S> point) {
  if (point.size() != p.vars().size()) throw VarSetMismatch();
  S total(0);
  for (const auto& [m, c] : p.terms()) {
    S t = c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::uint32_t e = 0; e < m[i]; ++e) t = t * point[i];
    }
    total = total + t;
  }
  return total;
}

/// Evaluates `p` with named bindings. Every variable that occurs in `p`
/// must be bound; binding a name outside the VarSet throws UnknownVariable.
template <Scalar S>
S evaluate(const MultiPoly<S>& p, const std::map<std::string, S>& bindings) {
  std::vector<S> point(p.vars().size(), S(0));
  std::vector<bool> bound(p.vars().size(), false);
  for (const auto& [name, value] : bindings) {
    const std::size_t i = p.vars().require(name);
    point[i] = value;
    bound[i] = true;
  }
  for (const auto& [m, c] : p.terms()) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] != 0 && !bound[i]) throw std::invalid_argument("variable '" + p.vars().name(i) + "' is unbound");
    }
  }
  return evaluate(p, std::span<const S>(point));
}

/// Substitutes polynomials over `target` for variables of `p`. Variables
/// of `p` without a binding are carried over by name and must exist in
/// `target`.
template <Scalar S>
MultiPoly<S> substitute(const MultiPoly<S>& p, const std::map<std::string, MultiPoly<S>>& bindings,
                        const VarSet& target) {
  std::vector<std::optional<MultiPoly<S>>> images(p.vars().size());
  for (const auto& [name, image] : bindings) {
    if (!(image.vars() == target)) throw VarSetMismatch();
    images[p.vars().require(name)] = image;
  }
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i]) continue;
    if (!target.index_of(p.vars().name(i))) {
      bool used = false;
      for (const auto& [m, c] : p.terms()) used = used || m[i] != 0;
      if (used) throw UnknownVariable(p.vars().name(i));
      continue;
    }
    images[i] = MultiPoly<S>::variable(target, p.vars().name(i));
  }

  // Power caches keep repeated factors like c0^3 from being recomputed per term.
  std::vector<std::vector<MultiPoly<S>>> powers(images.size());
  auto power = [&](std::size_t i, std::uint32_t e) -> const MultiPoly<S>& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(MultiPoly<S>::constant(target, S(1)));
    while (cache.size() <= e) cache.push_back(cache.back() * *images[i]);
    return cache[e];
  };

  MultiPoly<S> out(target);
  for (const auto& [m, c] : p.terms()) {
    MultiPoly<S> t = MultiPoly<S>::constant(target, c);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] != 0) t *= power(i, m[i]);
    }
    out += t;
  }
  return out;
}

template <Scalar S>
MultiPoly<S> substitute(const MultiPoly<S>& p, const std::map<std::string, MultiPoly<S>>& bindings) {
  return substitute(p, bindings, p.vars());
}

/// Applies `f` to every coefficient, producing a polynomial over another ring.
template <Scalar T, Scalar S, class F>
MultiPoly<T> map_coefficients(const MultiPoly<S>& p, F&& f) {
  MultiPoly<T> out(p.vars());
  for (const auto& [m, c] : p.terms()) out.accumulate(m, f(c));
  return out;
}

template <class R>
using Matrix3 = std::array<std::array<R, 3>, 3>;

/// Cofactor expansion along the first row. Works for any commutative ring
/// element type, scalars and polynomials alike.
template <class R>
R det3(const Matrix3<R>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

namespace detail {

template <OrderedScalar S>
std::pair<bool, std::string> coefficient_text(const S& c) {
  return {c.sign() < 0, to_string(c.abs())};
}

inline std::pair<bool, std::string> coefficient_text(const EisensteinRational& c) {
  if (c.is_rational()) return coefficient_text(c.x());
  return {false, "(" + c.to_string() + ")"};
}

}  // namespace detail

/// Formats terms in descending graded-lex order with explicit `*` and `^`,
/// e.g. "a0^3 + a1^3 + a2^3 - 3*a0*a1*a2". The result re-parses to the same
/// polynomial for Integer and Rational coefficients.
template <Scalar S>
std::string to_string(const MultiPoly<S>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    auto [negative, text] = detail::coefficient_text(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (m.degree() == 0) {
      out += text;
    } else {
      if (text != "1") out += text + "*";
      out += format_monomial(m, p.vars());
    }
  }
  return out;
}

/// Splits an integer polynomial as p = content * primitive, where the
/// primitive part has coprime coefficients and a positive leading
/// coefficient; the sign is pushed into the content. Throws
/// std::domain_error on the zero polynomial.
std::pair<Integer, MultiPoly<Integer>> content_and_primitive(const MultiPoly<Integer>& p);

}  // namespace cubic
