#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "cubic/multipoly.hpp"

namespace cubic {

/// Outcome of checking one polynomial identity lhs = rhs. `holds` is a
/// proof: the residual lhs - rhs expanded to the zero polynomial over exact
/// coefficients.
struct IdentityReport {
  std::string name;
  bool holds = false;
  std::size_t residual_term_count = 0;
  std::chrono::nanoseconds elapsed{0};
  /// Formatted residual; "0" when the identity holds.
  std::string residual;
};

/// Both sides of an identity, built independently from their formulas.
template <Scalar S>
struct PolynomialIdentity {
  std::string name;
  MultiPoly<S> lhs;
  MultiPoly<S> rhs;

  MultiPoly<S> residual() const { return lhs - rhs; }
};

template <Scalar S>
IdentityReport check_identity(const PolynomialIdentity<S>& identity) {
  const MultiPoly<S> r = identity.residual();
  return {identity.name, r.is_zero(), r.term_count(), std::chrono::nanoseconds{0}, to_string(r)};
}

/// (a0^2 + a1^2)(b0^2 + b1^2) = (a0 b0 - a1 b1)^2 + (a0 b1 + a1 b0)^2 over Z.
PolynomialIdentity<Integer> brahmagupta_identity();
/// det [[a0, -a1], [a1, a0]] = a0^2 + a1^2 over Z.
PolynomialIdentity<Integer> complex_matrix_norm_identity();
/// C(a) C(b) = C(c) with c0, c1, c2 substituted textually, over Z in six
/// variables.
PolynomialIdentity<Integer> ramanujan_identity();
/// (a0 + a1 + a2)(a0^2 + a1^2 + a2^2 - a0 a1 - a0 a2 - a1 a2) = C over Z.
PolynomialIdentity<Integer> real_factorization_identity();
/// (a0 + a1 + a2)(a0 + w a1 + w^2 a2)(a0 + w^2 a1 + w a2) = C over Q(w).
PolynomialIdentity<EisensteinRational> complex_factorization_identity();
/// H(C) = -54 C, with H computed by differentiate and det3.
PolynomialIdentity<Integer> hessian_eigenform_identity();

IdentityReport verify_brahmagupta();
IdentityReport verify_complex_matrix_norm();
IdentityReport verify_ramanujan();
IdentityReport verify_real_factorization();
IdentityReport verify_complex_factorization();
IdentityReport verify_hessian_eigenform();

/// Runs every verifier, in the order brahmagupta_fibonacci,
/// complex_matrix_norm, ramanujan_composition, real_factorization,
/// complex_factorization, hessian_eigenform.
std::vector<IdentityReport> run_all();

}  // namespace cubic
