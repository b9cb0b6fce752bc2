#include "cubic/identities.hpp"

#include "cubic/poly_parser.hpp"
#include "cubic/ternary_cubic.hpp"

namespace cubic {

namespace {

constexpr const char* kCubicForm = "a0^3 + a1^3 + a2^3 - 3*a0*a1*a2";

template <class Build>
IdentityReport timed(Build&& build) {
  const auto start = std::chrono::steady_clock::now();
  IdentityReport report = check_identity(build());
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace

PolynomialIdentity<Integer> brahmagupta_identity() {
  const VarSet vars{"a0", "a1", "b0", "b1"};
  return {"brahmagupta_fibonacci", parse<Integer>("(a0^2 + a1^2)*(b0^2 + b1^2)", vars),
          parse<Integer>("(a0*b0 - a1*b1)^2 + (a0*b1 + a1*b0)^2", vars)};
}

PolynomialIdentity<Integer> complex_matrix_norm_identity() {
  const VarSet vars{"a0", "a1"};
  const auto a0 = MultiPoly<Integer>::variable(vars, "a0");
  const auto a1 = MultiPoly<Integer>::variable(vars, "a1");
  // 2x2 determinant of [[a0, -a1], [a1, a0]].
  const MultiPoly<Integer> det = a0 * a0 - (-a1) * a1;
  return {"complex_matrix_norm", det, parse<Integer>("a0^2 + a1^2", vars)};
}

PolynomialIdentity<Integer> ramanujan_identity() {
  const VarSet six{"a0", "a1", "a2", "b0", "b1", "b2"};
  const MultiPoly<Integer> form = parse<Integer>(kCubicForm, ternary_vars());
  auto p = [&](const char* text) { return parse<Integer>(text, six); };

  const MultiPoly<Integer> c_of_a = substitute(form, {}, six);
  const MultiPoly<Integer> c_of_b = substitute(form, {{"a0", p("b0")}, {"a1", p("b1")}, {"a2", p("b2")}}, six);
  const MultiPoly<Integer> c_of_c = substitute(form,
                                               {{"a0", p("a0*b0 + a1*b2 + a2*b1")},
                                                {"a1", p("a0*b1 + a1*b0 + a2*b2")},
                                                {"a2", p("a0*b2 + a1*b1 + a2*b0")}},
                                               six);
  return {"ramanujan_composition", c_of_a * c_of_b, c_of_c};
}

PolynomialIdentity<Integer> real_factorization_identity() {
  const VarSet& vars = ternary_vars();
  return {"real_factorization",
          parse<Integer>("(a0 + a1 + a2)*(a0^2 + a1^2 + a2^2 - a0*a1 - a0*a2 - a1*a2)", vars),
          parse<Integer>(kCubicForm, vars)};
}

PolynomialIdentity<EisensteinRational> complex_factorization_identity() {
  using E = EisensteinRational;
  const VarSet& vars = ternary_vars();
  const auto a0 = MultiPoly<E>::variable(vars, "a0");
  const auto a1 = MultiPoly<E>::variable(vars, "a1");
  const auto a2 = MultiPoly<E>::variable(vars, "a2");
  const E w = E::omega();
  const E w2 = w * w;
  const MultiPoly<E> product = (a0 + a1 + a2) * (a0 + w * a1 + w2 * a2) * (a0 + w2 * a1 + w * a2);
  return {"complex_factorization", product, parse<E>(kCubicForm, vars)};
}

PolynomialIdentity<Integer> hessian_eigenform_identity() {
  const MultiPoly<Integer> form = parse<Integer>(kCubicForm, ternary_vars());
  const MultiPoly<Integer> h = hessian(TernaryCubic<Integer>::from_poly(form)).to_poly();
  return {"hessian_eigenform", h, form * Integer(-54)};
}

IdentityReport verify_brahmagupta() { return timed(brahmagupta_identity); }
IdentityReport verify_complex_matrix_norm() { return timed(complex_matrix_norm_identity); }
IdentityReport verify_ramanujan() { return timed(ramanujan_identity); }
IdentityReport verify_real_factorization() { return timed(real_factorization_identity); }
IdentityReport verify_complex_factorization() { return timed(complex_factorization_identity); }
IdentityReport verify_hessian_eigenform() { return timed(hessian_eigenform_identity); }

std::vector<IdentityReport> run_all() {
  return {verify_brahmagupta(),          verify_complex_matrix_norm(),   verify_ramanujan(),
          verify_real_factorization(),   verify_complex_factorization(), verify_hessian_eigenform()};
}

}  // namespace cubic
