#include <gtest/gtest.h>

#include "cubic/errors.hpp"
#include "cubic/scalar.hpp"
#include "generators.hpp"

namespace cubic {
namespace {

using testing::Gen;
using E = EisensteinRational;

constexpr int kCases = 1000;

TEST(Integer, ParseAndFormat) {
  EXPECT_EQ(Integer::parse("-3"), Integer(-3));
  EXPECT_EQ(Integer::parse("+12").to_string(), "12");
  EXPECT_EQ(Integer::parse("-0").to_string(), "0");
  EXPECT_EQ(Integer::parse("123456789012345678901234567890").to_string(), "123456789012345678901234567890");
  EXPECT_THROW(Integer::parse(""), ParseError);
  EXPECT_THROW(Integer::parse("-"), ParseError);
  EXPECT_THROW(Integer::parse("12a"), ParseError);
}

TEST(Integer, NoNegativeZero) {
  EXPECT_EQ(-Integer(0), Integer(0));
  EXPECT_EQ((Integer(5) - Integer(5)).sign(), 0);
  EXPECT_EQ((-Integer(0)).to_string(), "0");
}

TEST(Integer, DivisionByZero) {
  EXPECT_THROW(Integer(3) / Integer(0), DivisionByZero);
  EXPECT_THROW(Integer(3) % Integer(0), DivisionByZero);
}

TEST(Integer, Int64Boundaries) {
  EXPECT_TRUE(Integer(INT64_MIN).fits_int64());
  EXPECT_FALSE((Integer(INT64_MAX) + Integer(1)).fits_int64());
  EXPECT_THROW((Integer(INT64_MAX) + Integer(1)).to_int64(), DomainMismatch);
}

TEST(Integer, RingAxioms) {
  Gen gen(1);
  for (int i = 0; i < kCases; ++i) {
    const Integer a = gen.integer(), b = gen.integer(), c = gen.integer();
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a - a, Integer(0));
    ASSERT_EQ(a * Integer(1), a);
  }
}

TEST(Rational, Canonical) {
  const Rational r(Integer(6), Integer(-4));
  EXPECT_EQ(r.num(), Integer(-3));
  EXPECT_EQ(r.den(), Integer(2));
  EXPECT_EQ(Rational(0, 7).den(), Integer(1));
  EXPECT_EQ(Rational(2, 4), Rational(1, 2));
  EXPECT_THROW(Rational(1, 0), DivisionByZero);
}

TEST(Rational, ParseAndFormat) {
  EXPECT_EQ(Rational::parse("5/7").to_string(), "5/7");
  EXPECT_EQ(Rational::parse("-3").to_string(), "-3");
  EXPECT_EQ(Rational::parse("-6/4").to_string(), "-3/2");
  EXPECT_EQ(Rational::parse("4/2").to_string(), "2");
  EXPECT_THROW(Rational::parse("1/0"), ParseError);
  EXPECT_THROW(Rational::parse("1/-2"), ParseError);
  EXPECT_THROW(Rational::parse("1/"), ParseError);
  try {
    Rational::parse("12/3x");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4U);
  }
}

TEST(Rational, DivisionByZeroIsReported) {
  EXPECT_THROW(Rational(1) / Rational(0), DivisionByZero);
  EXPECT_THROW(Rational(0).inverse(), DivisionByZero);
}

TEST(Rational, FieldAxiomsStayCanonical) {
  Gen gen(2);
  auto canonical = [](const Rational& r) {
    return r.den().sign() > 0 && gcd(r.num(), r.den()) == Integer(1);
  };
  for (int i = 0; i < kCases; ++i) {
    const Rational a = gen.rational(), b = gen.rational(), c = gen.rational();
    for (const Rational& r : {a + b, a - b, a * b, -a}) ASSERT_TRUE(canonical(r)) << r;
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * b, b * a);
    if (!b.is_zero()) {
      ASSERT_TRUE(canonical(a / b));
      ASSERT_EQ(a / b * b, a);
    }
  }
}

TEST(Rational, Ordering) {
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_LT(Rational(-1, 2), Rational(-1, 3));
  EXPECT_EQ(Rational(2, 6) <=> Rational(1, 3), std::strong_ordering::equal);
}

TEST(Eisenstein, OmegaSquared) {
  const E w = E::omega();
  EXPECT_EQ(w * w, E(Rational(-1), Rational(-1)));
  EXPECT_EQ(w * w * w, E(1));
  EXPECT_EQ(E(1) + w + w * w, E(0));
}

TEST(Eisenstein, HandProducts) {
  const E one_plus_w(Rational(1), Rational(1));
  EXPECT_EQ(one_plus_w * (-E::omega()), E(1));
  Gen gen(3);
  for (int i = 0; i < 20; ++i) {
    const E b = gen.eisenstein();
    EXPECT_EQ(E(1) * b, b);
  }
}

TEST(Eisenstein, Conjugate) {
  EXPECT_EQ(E::omega().conj(), E(Rational(-1), Rational(-1)));
  EXPECT_EQ(E(5).conj(), E(5));
  const E one_plus_w(Rational(1), Rational(1));
  EXPECT_EQ(one_plus_w * one_plus_w.conj(), E(1));
  EXPECT_EQ(one_plus_w.norm(), Rational(1));
}

TEST(Eisenstein, Format) {
  EXPECT_EQ(E(Rational(1), Rational(1)).to_string(), "1 + 1*w");
  EXPECT_EQ((-E::omega()).to_string(), "0 - 1*w");
  EXPECT_EQ(E(Rational(2)).to_string(), "2 + 0*w");
  EXPECT_EQ(E(Rational(1, 2), Rational(-3, 4)).to_string(), "1/2 - 3/4*w");
}

TEST(Eisenstein, FieldPropertiesHold) {
  Gen gen(4);
  for (int i = 0; i < kCases; ++i) {
    const E a = gen.eisenstein(), b = gen.eisenstein(), c = gen.eisenstein();
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a * b).norm(), a.norm() * b.norm());
    ASSERT_EQ((a * b).conj(), a.conj() * b.conj());
    ASSERT_EQ((a + b).conj(), a.conj() + b.conj());
    ASSERT_EQ(a.conj().conj(), a);
    ASSERT_EQ(a * a.conj(), E(a.norm()));
    if (!a.is_zero()) ASSERT_EQ(a * a.inverse(), E(1));
  }
}

TEST(Eisenstein, DivisionByZero) { EXPECT_THROW(E(1) / E(0), DivisionByZero); }

}  // namespace
}  // namespace cubic
