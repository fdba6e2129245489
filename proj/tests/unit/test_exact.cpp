#include <gtest/gtest.h>

#include "elliptikit/exact.hpp"
#include "elliptikit/literals.hpp"
#include "elliptikit/path.hpp"

using namespace elliptikit;

TEST(Rational, DecimalLiteralsAreExact) {
  EXPECT_EQ(rational_from_decimal("0.1"), Rational(1, 10));
  EXPECT_EQ(rational_from_decimal("-2.50"), Rational(-5, 2));
  EXPECT_EQ(rational_from_decimal("7"), Rational(7));
}

TEST(GaussRational, FieldOperations) {
  GaussRational a(Rational(1, 2), Rational(3));
  GaussRational b(Rational(-2), Rational(1, 3));
  EXPECT_EQ((a * b) / b, a);
  EXPECT_EQ(a - a, GaussRational(0));
  EXPECT_EQ(a * a.conj(), GaussRational(a.norm()));
  GaussRational i(Rational(0), Rational(1));
  EXPECT_EQ(i * i, GaussRational(-1));
}

TEST(Scalar, OpaqueConstantsMultiply) {
  Scalar s = Scalar::e2() * Scalar::g2() + Scalar(3);
  EXPECT_FALSE(s.is_constant());
  EXPECT_EQ(s.constant_term(), GaussRational(3));
  CurveConstants k{2.0, 5.0, 7.0};
  EXPECT_DOUBLE_EQ(s.evaluate(k).real(), 13.0);
  EXPECT_TRUE((s - s).is_zero());
}

TEST(Combinatorics, FactorialAndBinomial) {
  EXPECT_EQ(factorial(0), Rational(1));
  EXPECT_EQ(factorial(6), Rational(720));
  EXPECT_EQ(binomial(6, 2), Rational(15));
  EXPECT_EQ(binomial(4, 0), Rational(1));
}

TEST(GradedSymbol, KroneckerFormulaLowDegrees) {
  GradedSymbol g0 = GradedSymbol::kronecker_formula(0);
  EXPECT_EQ(g0.degree(), 0);
  EXPECT_EQ(g0.coeff(0), Scalar(1));
  GradedSymbol g2 = GradedSymbol::kronecker_formula(2);
  EXPECT_EQ(g2.coeff(2), Scalar(Rational(1, 2)));
  EXPECT_TRUE(g2.coeff(1).is_zero());
  EXPECT_EQ(g2.coeff(0), Scalar(Rational(-1, 2)));
}

TEST(GradedSymbol, ProductOfLinearFactors) {
  GradedSymbol x(1), y(1);
  x.set_coeff(1, Scalar(1));
  y.set_coeff(0, Scalar(1));
  GradedSymbol diff = x, sum = x;
  diff -= y;
  sum += y;
  GradedSymbol p = diff * sum;
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p.coeff(2), Scalar(1));
  EXPECT_TRUE(p.coeff(1).is_zero());
  EXPECT_EQ(p.coeff(0), Scalar(-1));
  EXPECT_TRUE(p.in_admissible_subspace());
  EXPECT_FALSE((x * y).in_admissible_subspace());
}

TEST(Literals, ComplexForms) {
  EXPECT_EQ(parse_complex("0.3,0.1"), Complex(0.3, 0.1));
  EXPECT_EQ(parse_complex("1+2i"), Complex(1.0, 2.0));
  EXPECT_EQ(parse_complex("-0.5i"), Complex(0.0, -0.5));
  EXPECT_EQ(parse_complex("i"), Complex(0.0, 1.0));
  EXPECT_EQ(parse_complex("2"), Complex(2.0, 0.0));
  EXPECT_THROW(parse_complex(""), ParseError);
}

TEST(Literals, PathVertices) {
  auto v = parse_vertices("path:[0,0; 0.5,0; 0.5,0.5]");
  ASSERT_EQ(v.size(), 3u);
  EXPECT_EQ(v[2], Complex(0.5, 0.5));
  EXPECT_THROW(parse_vertices("[0,0; 1,0"), ParseError);
}

TEST(Path, ConcatenationAndReversal) {
  Path a = Path::segment(0.0, 1.0);
  Path b = Path::segment(1.0, Complex(1.0, 1.0));
  Path ab = a.then(b);
  EXPECT_EQ(ab.segment_count(), 2u);
  EXPECT_NEAR(ab.length(), 2.0, 1e-15);
  EXPECT_EQ(ab.reversed().start(), Complex(1.0, 1.0));
  EXPECT_THROW(b.then(b), Error);
}

TEST(Path, ValidationRejectsPunctures) {
  LatticeContext ctx(Complex(0.0, 1.0));
  PunctureSet s(ctx, {Complex(0.5, 0.5)});
  EXPECT_NO_THROW(Path::segment(Complex(0.1, 0.1), Complex(0.3, 0.1)).validate(s, 1e-3));
  EXPECT_THROW(Path::segment(Complex(0.1, 0.1), Complex(0.9, 0.9)).validate(s, 1e-3), Error);
  EXPECT_THROW(Path::segment(Complex(0.5, 0.2), Complex(0.5, 1.2)).validate(s, 1e-3), Error);
  EXPECT_NO_THROW(Path::segment(0.0, Complex(0.3, 0.1)).validate(s, 1e-3, StartMode::at_puncture));
}
