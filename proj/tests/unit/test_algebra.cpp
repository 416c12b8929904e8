#include <gtest/gtest.h>

#include <cmath>

#include "dunkl/matrix.hpp"
#include "dunkl/polynomial.hpp"
#include "dunkl/scalar.hpp"

using namespace dunkl;

namespace {

Polynomial P(const char* text, std::size_t dim, Mode mode = Mode::exact) { return Polynomial::parse(text, dim, mode); }

}  // namespace

TEST(Scalar, ParsesRationalsAndDecimals) {
  EXPECT_EQ(Scalar::parse("3/6", Mode::exact), Scalar::rational(1, 2));
  EXPECT_EQ(Scalar::parse("2.5", Mode::exact), Scalar::rational(5, 2));
  EXPECT_EQ(Scalar::parse("1e-3", Mode::exact), Scalar::rational(1, 1000));
  EXPECT_EQ(Scalar::parse("-7", Mode::exact), Scalar(-7));
  EXPECT_DOUBLE_EQ(Scalar::parse("1/4", Mode::floating).to_double(), 0.25);
  EXPECT_THROW(Scalar::parse("1/0", Mode::exact), Error);
  EXPECT_THROW(Scalar::parse("abc", Mode::exact), Error);
}

TEST(Scalar, ArithmeticIsExact) {
  Scalar a = Scalar::rational(1, 3);
  Scalar b = Scalar::rational(1, 6);
  EXPECT_EQ(a + b, Scalar::rational(1, 2));
  EXPECT_EQ(a * b, Scalar::rational(1, 18));
  EXPECT_EQ(a / b, Scalar(2));
  EXPECT_EQ((a - b).sign(), 1);
  EXPECT_EQ(Scalar::rational(-2, 3).pow(3), Scalar::rational(-8, 27));
  EXPECT_EQ(factorial(10, Mode::exact), Scalar(3628800));
  EXPECT_THROW(Scalar(0).inverse(), Error);
}

TEST(Scalar, ModesDoNotMix) {
  EXPECT_THROW(Scalar(1) + Scalar(1.0), ModeMismatch);
  EXPECT_EQ(Scalar(0.5).as(Mode::exact), Scalar::rational(1, 2));
  EXPECT_EQ(Scalar::rational(1, 4).as(Mode::floating), Scalar(0.25));
}

TEST(Monomial, GradedLexOrder) {
  const auto& basis = homogeneous_basis(3, 2);
  ASSERT_EQ(basis.size(), 6u);
  EXPECT_EQ(basis[0], (Monomial{2, 0, 0}));
  EXPECT_EQ(basis[1], (Monomial{1, 1, 0}));
  EXPECT_EQ(basis[2], (Monomial{1, 0, 1}));
  EXPECT_EQ(basis[3], (Monomial{0, 2, 0}));
  EXPECT_EQ(basis[5], (Monomial{0, 0, 2}));
  for (std::size_t i = 0; i < basis.size(); ++i) EXPECT_EQ(basis_index(basis[i]), i);
  EXPECT_EQ(basis_up_to(2, 3).size(), 10u);
  EXPECT_EQ(homogeneous_basis(4, 5).size(), 56u);
}

TEST(Polynomial, ParseAndPrintRoundTrip) {
  Polynomial p = P("3/2*x1^2*x2 - x2^3 + 1", 2);
  EXPECT_EQ(p.to_string(), "3/2*x1^2*x2 - x2^3 + 1");
  EXPECT_EQ(P(p.to_string().c_str(), 2), p);
  EXPECT_EQ(P("x^2 - 2*x", 1), P("x1^2 - 2*x1", 1));
  EXPECT_EQ(P("(x1 + x2)^2", 2), P("x1^2 + 2*x1*x2 + x2^2", 2));
  EXPECT_EQ(P("0", 2).degree(), -1);
  EXPECT_THROW(P("x3", 2), Error);
  EXPECT_THROW(P("x1 +", 2), Error);
}

TEST(Polynomial, RingOperations) {
  Polynomial a = P("x1 + x2", 2);
  Polynomial b = P("x1 - x2", 2);
  EXPECT_EQ(a * b, P("x1^2 - x2^2", 2));
  EXPECT_EQ(a.pow(3), a * a * a);
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ((a * b).degree(), 2);
  EXPECT_TRUE((a * b).is_homogeneous());
  EXPECT_FALSE(P("x1 + 1", 2).is_homogeneous());
}

TEST(Polynomial, DerivativesAndEvaluation) {
  Polynomial p = P("x1^3*x2 + 2*x2^2", 2);
  EXPECT_EQ(p.derivative(0), P("3*x1^2*x2", 2));
  EXPECT_EQ(p.derivative(1), P("x1^3 + 4*x2", 2));
  Vector xi = {Scalar(1), Scalar(2)};
  EXPECT_EQ(p.directional_derivative(xi), p.derivative(0) + Scalar(2) * p.derivative(1));
  Vector x = {Scalar::rational(1, 2), Scalar(3)};
  EXPECT_EQ(p.evaluate(x), Scalar::rational(3, 8) + Scalar(18));
  std::vector<double> xd = {0.5, 3.0};
  EXPECT_DOUBLE_EQ(p.evaluate_double(xd), 18.375);
}

TEST(Polynomial, SubstitutionByOrthogonalMatrix) {
  Polynomial p = P("x1^2*x2 + x2", 2);
  Matrix swap(2, 2, Mode::exact);
  swap(0, 1) = Scalar(1);
  swap(1, 0) = Scalar(1);
  EXPECT_EQ(p.substitute(swap), P("x2^2*x1 + x1", 2));
  EXPECT_EQ(linear_substitute(p, swap), P("x2^2*x1 + x1", 2));
  Matrix skew = Matrix::identity(2, Mode::exact);
  skew(0, 1) = Scalar(1);
  EXPECT_THROW(linear_substitute(p, skew), Error);
}

TEST(Polynomial, DivisionByLinearForm) {
  Vector a = {Scalar(1), Scalar(-1)};
  Polynomial p = P("x1^3 - x2^3", 2);
  EXPECT_EQ(exact_divide_by_linear(p, a), P("x1^2 + x1*x2 + x2^2", 2));
  Division d = divide_by_linear(P("x1^2 + x2", 2), a);
  EXPECT_EQ(d.quotient * Polynomial::linear_form(a) + d.remainder, P("x1^2 + x2", 2));
  for (const auto& [m, c] : d.remainder.terms()) EXPECT_EQ(m[0], 0u);
  EXPECT_THROW(exact_divide_by_linear(P("x1^2 + x2", 2), a), DivisionRemainder);

  Vector b = {Scalar(0), Scalar(2), Scalar(1)};
  Polynomial q = P("x1*x2 - 3*x3^2 + x1", 3);
  Polynomial f = q * Polynomial::linear_form(b);
  EXPECT_EQ(exact_divide_by_linear(f, b), q);
}

TEST(Polynomial, FloatingModeDivisionTolerance) {
  Vector a = {Scalar(1.0), Scalar(-1.0)};
  Polynomial p = P("x1^2 - x2^2", 2, Mode::floating);
  Polynomial q = exact_divide_by_linear(p, a);
  EXPECT_EQ(q, P("x1 + x2", 2, Mode::floating));
}

TEST(Polynomial, HomogeneousParts) {
  Polynomial p = P("x1^2 + 3*x2 + x1*x2 - 4", 2);
  auto parts = p.homogeneous_parts();
  ASSERT_EQ(parts.size(), 3u);
  EXPECT_EQ(parts[0].first, 0u);
  EXPECT_EQ(parts[2].second, P("x1^2 + x1*x2", 2));
  EXPECT_EQ(p.homogeneous_part(1), P("3*x2", 2));
}

TEST(Polynomial, ArNormEstimateIsMonotoneAndScales) {
  Polynomial p = P("x1^2 - x2^2 + x1 + 3", 2);
  double a = ar_norm_estimate(p, 1.0, 16);
  double b = ar_norm_estimate(p, 1.0, 256);
  EXPECT_LE(a, b);
  // Exact value for this p at r = 1 is 1 + 1 + 3.
  EXPECT_LE(b, 5.0 + 1e-12);
  EXPECT_GT(b, 4.9);
  Polynomial x3 = P("x^3", 1);
  EXPECT_DOUBLE_EQ(ar_norm_estimate(x3, 2.0, 4), 8.0);
}

TEST(Matrix, LinearSolveExact) {
  Matrix a(3, 3, Mode::exact);
  int vals[9] = {2, 1, 0, 1, 3, 1, 0, 1, 4};
  for (int i = 0; i < 9; ++i) a(i / 3, i % 3) = Scalar(vals[i]);
  Matrix b(3, 1, Mode::exact);
  b(0, 0) = Scalar(1);
  b(1, 0) = Scalar(2);
  b(2, 0) = Scalar(3);
  LinearSolve s = solve_linear(a, b);
  EXPECT_EQ(s.rank, 3u);
  EXPECT_TRUE(s.consistent);
  EXPECT_EQ(a * s.solution, b);
}

TEST(Matrix, ReflectionMatrixIsInvolution) {
  Vector r = {Scalar(1), Scalar(2), Scalar(-1)};
  Matrix s = reflection_matrix(r);
  EXPECT_EQ(s * s, Matrix::identity(3, Mode::exact));
  EXPECT_TRUE(is_orthogonal(s));
  EXPECT_EQ(s * r, Scalar(-1) * r);
}
