#pragma once

#include <string_view>

#include "cubic/multipoly.hpp"

namespace cubic {

/// Parses polynomial text over `vars` with rational coefficients.
///
///   expr     := term (("+" | "-") term)*
///   term     := factor ("*" factor)*
///   factor   := "-" factor | atom ("^" uint)?
///   atom     := rational | var | "(" expr ")"
///   rational := int ("/" uint)?
///
/// Whitespace between tokens is ignored. Multiplication must be written
/// explicitly, and `-a0^2` means -(a0^2). Throws ParseError carrying the
/// offset of the offending character, or UnknownVariable for identifiers
/// outside `vars`.
MultiPoly<Rational> parse_polynomial(std::string_view text, const VarSet& vars);

/// parse_polynomial followed by exact conversion into S; throws
/// DomainMismatch if a coefficient has no image (e.g. 1/2 over Integer).
template <Scalar S>
MultiPoly<S> parse(std::string_view text, const VarSet& vars) {
  if constexpr (std::same_as<S, Rational>) {
    return parse_polynomial(text, vars);
  } else {
    return map_coefficients<S>(parse_polynomial(text, vars),
                               [](const Rational& r) { return scalar_from_rational<S>(r); });
  }
}

}  // namespace cubic
