#include "cubic/circulant.hpp"

namespace cubic {

Triple<Rational> parse_triple(std::string_view text) {
  Triple<Rational> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t comma = text.find(',', start);
    const bool last = i == 2;
    if (!last && comma == std::string_view::npos) throw ParseError("expected ','", text.size());
    if (last && comma != std::string_view::npos) throw ParseError("expected exactly three components", comma);
    const std::size_t end = last ? text.size() : comma;
    try {
      out[i] = Rational::parse(text.substr(start, end - start));
    } catch (const ParseError& e) {
      throw ParseError("malformed scalar", start + e.position());
    }
    start = end + 1;
  }
  return out;
}

Triple<Rational> invert(const Triple<Rational>& a) {
  const Rational norm = cubic_norm(a);
  if (norm.is_zero()) throw SingularElement();
  return {(a[0] * a[0] - a[1] * a[2]) / norm,
          (a[2] * a[2] - a[0] * a[1]) / norm,
          (a[1] * a[1] - a[0] * a[2]) / norm};
}

std::string to_string(ZeroDivisorClass tag) {
  switch (tag) {
    case ZeroDivisorClass::NotZeroDivisor:
      return "NotZeroDivisor";
    case ZeroDivisorClass::TraceZeroPlane:
      return "TraceZeroPlane";
    case ZeroDivisorClass::DiagonalLine:
      return "DiagonalLine";
    case ZeroDivisorClass::Zero:
      return "Zero";
  }
  return "?";
}

std::string to_string(AnnihilatorKind kind) {
  switch (kind) {
    case AnnihilatorKind::Trivial:
      return "trivial";
    case AnnihilatorKind::Line:
      return "line";
    case AnnihilatorKind::Plane:
      return "plane";
    case AnnihilatorKind::Everything:
      return "everything";
  }
  return "?";
}

}  // namespace cubic
