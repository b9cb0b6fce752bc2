#include <gtest/gtest.h>

#include "cubic/circulant.hpp"
#include "generators.hpp"
#include "matrix_oracle.hpp"

namespace cubic {
namespace {

using testing::Gen;
using IT = Triple<Integer>;
using QT = Triple<Rational>;
using E = EisensteinRational;

constexpr int kCases = 1000;

TEST(Compose, Examples) {
  Gen gen(30);
  for (int i = 0; i < 20; ++i) {
    const IT b = gen.int_triple();
    EXPECT_EQ(compose(IT::one(), b), b);
    EXPECT_EQ(compose(b, IT::one()), b);
  }
  EXPECT_EQ(compose(IT(1, 1, 0), IT(1, 1, 0)), IT(1, 2, 1));
  EXPECT_EQ(compose(IT(1, -1, 0), IT(1, 1, 1)), IT(0, 0, 0));
}

TEST(Compose, CommutativeRing) {
  Gen gen(31);
  for (int i = 0; i < kCases; ++i) {
    const IT a = gen.int_triple(), b = gen.int_triple(), c = gen.int_triple();
    ASSERT_EQ(compose(a, b), compose(b, a));
    ASSERT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
  }
}

TEST(CubicNorm, Examples) {
  EXPECT_EQ(cubic_norm(IT(1, 0, 0)), Integer(1));
  EXPECT_EQ(cubic_norm(IT(1, 1, 1)), Integer(0));
  EXPECT_EQ(cubic_norm(IT(1, 2, 1)), Integer(4));
  EXPECT_EQ(cubic_norm(IT(1, 2, 1)), pow(cubic_norm(IT(1, 1, 0)), 2));
}

TEST(CubicNorm, Multiplicative) {
  Gen gen(32);
  for (int i = 0; i < kCases; ++i) {
    const IT a = gen.int_triple(1000), b = gen.int_triple(1000);
    ASSERT_EQ(cubic_norm(compose(a, b)), cubic_norm(a) * cubic_norm(b));
  }
}

TEST(ToMatrix, Shapes) {
  EXPECT_EQ(to_matrix(IT(1, 0, 0)).rows(), testing::identity3<Integer>());
  const auto p = to_matrix(IT(0, 1, 0)).rows();
  EXPECT_NE(p, testing::identity3<Integer>());
  EXPECT_EQ(testing::matmul(testing::matmul(p, p), p), testing::identity3<Integer>());
  const auto m = to_matrix(IT(4, 5, 6));
  EXPECT_EQ(m(1, 0), Integer(6));
  EXPECT_EQ(m(2, 0), Integer(5));
  EXPECT_EQ(m(2, 1), Integer(6));
  EXPECT_EQ(m.first_row(), IT(4, 5, 6));
}

TEST(ToMatrix, ProductExample) {
  const IT a(1, 1, 0), b(1, 2, 1);
  EXPECT_EQ(testing::matmul(to_matrix(a).rows(), to_matrix(b).rows()), to_matrix(compose(a, b)).rows());
}

TEST(ToMatrix, HomomorphismAndDeterminant) {
  Gen gen(33);
  for (int i = 0; i < kCases; ++i) {
    const QT a = gen.rational_triple(), b = gen.rational_triple();
    ASSERT_EQ(testing::matmul(to_matrix(a).rows(), to_matrix(b).rows()), to_matrix(compose(a, b)).rows());
    ASSERT_EQ(to_matrix(a).determinant(), cubic_norm(a));
  }
}

TEST(Eigenvalues, Examples) {
  const auto one = eigenvalues(IT(1, 0, 0));
  EXPECT_EQ(one, (std::array<E, 3>{E(1), E(1), E(1)}));

  const auto ev = eigenvalues(IT(1, 1, 0));
  EXPECT_EQ(ev[0], E(2));
  EXPECT_EQ(ev[1], E(Rational(1), Rational(1)));
  EXPECT_EQ(ev[2], -E::omega());
  EXPECT_EQ(ev[0] * ev[1] * ev[2], E(2));
}

TEST(Eigenvalues, ProductIsNormAndConjugatePair) {
  Gen gen(34);
  for (int i = 0; i < kCases; ++i) {
    const QT a = gen.rational_triple();
    const auto ev = eigenvalues(a);
    ASSERT_EQ(ev[0] * ev[1] * ev[2], E(cubic_norm(a)));
    ASSERT_EQ(ev[2], ev[1].conj());
    ASSERT_TRUE(ev[0].is_rational());
  }
}

TEST(Invert, Examples) {
  EXPECT_EQ(invert(QT(1, 0, 0)), QT(1, 0, 0));
  EXPECT_EQ(invert(QT(1, 1, 0)), QT(Rational(1, 2), Rational(-1, 2), Rational(1, 2)));
  EXPECT_THROW(invert(QT(1, 1, 1)), SingularElement);
  EXPECT_THROW(invert(QT(1, -1, 0)), SingularElement);
  try {
    invert(QT(1, 1, 1));
  } catch (const SingularElement& e) {
    EXPECT_STREQ(e.what(), "singular element: C(a) = 0");
  }
}

// A(b) = A(a)^-1 has first column (b0, b2, b1), which is the solution of
// A(a) x = e0.
TEST(Invert, AgreesWithLinearSystem) {
  Gen gen(35);
  int checked = 0;
  for (int i = 0; i < kCases; ++i) {
    const QT a = gen.rational_triple();
    const auto x = testing::solve3(to_matrix(a).rows(), {Rational(1), Rational(0), Rational(0)});
    if (cubic_norm(a).is_zero()) {
      ASSERT_FALSE(x.has_value());
      ASSERT_THROW(invert(a), SingularElement);
      continue;
    }
    ASSERT_TRUE(x.has_value());
    const QT inv = invert(a);
    ASSERT_EQ(inv, QT((*x)[0], (*x)[2], (*x)[1]));
    ASSERT_EQ(compose(a, inv), QT::one());
    ++checked;
  }
  EXPECT_GT(checked, 900);
}

TEST(ClassifyZeroDivisor, Examples) {
  const auto diag = classify_zero_divisor(IT(1, 1, 1));
  EXPECT_EQ(diag.tag, ZeroDivisorClass::DiagonalLine);
  EXPECT_EQ(diag.annihilator.kind, AnnihilatorKind::Plane);
  EXPECT_EQ(diag.annihilator.vector, QT(1, 1, 1));

  const auto plane = classify_zero_divisor(IT(1, -1, 0));
  EXPECT_EQ(plane.tag, ZeroDivisorClass::TraceZeroPlane);
  EXPECT_EQ(plane.annihilator.kind, AnnihilatorKind::Line);

  EXPECT_EQ(classify_zero_divisor(IT(1, 1, 0)).tag, ZeroDivisorClass::NotZeroDivisor);
  EXPECT_EQ(classify_zero_divisor(IT(0, 0, 0)).tag, ZeroDivisorClass::Zero);
  EXPECT_EQ(classify_zero_divisor(QT(Rational(1, 2), Rational(1, 2), Rational(1, 2))).tag,
            ZeroDivisorClass::DiagonalLine);
}

// Over the rationals, C(a) = 0 exactly on the two zero-divisor loci.
TEST(ClassifyZeroDivisor, SingularIffZeroDivisor) {
  for (int a0 = -3; a0 <= 3; ++a0) {
    for (int a1 = -3; a1 <= 3; ++a1) {
      for (int a2 = -3; a2 <= 3; ++a2) {
        const IT a(a0, a1, a2);
        const bool singular = cubic_norm(a).is_zero();
        ASSERT_EQ(singular, classify_zero_divisor(a).tag != ZeroDivisorClass::NotZeroDivisor) << to_string(a);
      }
    }
  }
}

TEST(ClassifyZeroDivisor, AnnihilatorDescriptionIsExact) {
  for (int a0 = -2; a0 <= 2; ++a0) {
    for (int a1 = -2; a1 <= 2; ++a1) {
      for (int a2 = -2; a2 <= 2; ++a2) {
        const IT a(a0, a1, a2);
        const auto info = classify_zero_divisor(a);
        for (int b0 = -2; b0 <= 2; ++b0) {
          for (int b1 = -2; b1 <= 2; ++b1) {
            for (int b2 = -2; b2 <= 2; ++b2) {
              const IT b(b0, b1, b2);
              ASSERT_EQ(compose(a, b).is_zero(), info.annihilator.contains(b))
                  << to_string(a) << " * " << to_string(b);
            }
          }
        }
      }
    }
  }
}

TEST(ParseTriple, Syntax) {
  EXPECT_EQ(parse_triple("1/2,-1/2,1/2"), QT(Rational(1, 2), Rational(-1, 2), Rational(1, 2)));
  EXPECT_EQ(to_string(parse_triple("2/4,0,-3")), "1/2,0,-3");
  EXPECT_THROW(parse_triple("1,2"), ParseError);
  EXPECT_THROW(parse_triple("1,2,3,4"), ParseError);
  EXPECT_THROW(parse_triple("1,,3"), ParseError);
  EXPECT_THROW(parse_triple("1, 2,3"), ParseError);
  try {
    parse_triple("1,2,x");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4U);
  }
}

}  // namespace
}  // namespace cubic
