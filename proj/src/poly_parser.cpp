#include "cubic/poly_parser.hpp"

#include <cctype>
#include <limits>

namespace cubic {

namespace {

constexpr std::uint32_t kMaxExponent = 4096;

class Parser {
 public:
  Parser(std::string_view text, const VarSet& vars) : text_(text), vars_(vars) {}

  MultiPoly<Rational> parse() {
    MultiPoly<Rational> result = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    if (pos_ >= text_.size()) throw ParseError(message + " (end of input)", pos_);
    throw ParseError(message, pos_);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool consume(char ch) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool at_digit() const {
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  Integer digits() {
    if (!at_digit()) fail("expected digits");
    Integer value = 0;
    while (at_digit()) value = value * 10 + (text_[pos_++] - '0');
    return value;
  }

  MultiPoly<Rational> expr() {
    MultiPoly<Rational> acc = term();
    for (;;) {
      if (consume('+')) {
        acc += term();
      } else if (consume('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  MultiPoly<Rational> term() {
    MultiPoly<Rational> acc = factor();
    while (consume('*')) acc *= factor();
    return acc;
  }

  MultiPoly<Rational> factor() {
    if (consume('-')) return -factor();
    MultiPoly<Rational> base = atom();
    if (!consume('^')) return base;
    skip_space();
    const std::size_t start = pos_;
    const Integer e = digits();
    if (e > Integer(kMaxExponent)) {
      pos_ = start;
      fail("exponent exceeds " + std::to_string(kMaxExponent));
    }
    return pow(base, static_cast<unsigned>(e.to_int64()));
  }

  MultiPoly<Rational> atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("expected operand");
    const char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      MultiPoly<Rational> inner = expr();
      if (!consume(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      Integer num = digits();
      Integer den = 1;
      if (consume('/')) {
        skip_space();
        const std::size_t start = pos_;
        den = digits();
        if (den.is_zero()) {
          pos_ = start;
          fail("zero denominator");
        }
      }
      return MultiPoly<Rational>::constant(vars_, Rational(num, den));
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string name(text_.substr(start, pos_ - start));
      if (!vars_.index_of(name)) throw UnknownVariable(name);
      return MultiPoly<Rational>::variable(vars_, name);
    }
    fail("unexpected '" + std::string(1, ch) + "'");
  }

  std::string_view text_;
  const VarSet& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly<Rational> parse_polynomial(std::string_view text, const VarSet& vars) {
  return Parser(text, vars).parse();
}

}  // namespace cubic
