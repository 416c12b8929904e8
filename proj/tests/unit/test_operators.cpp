#include <gtest/gtest.h>

#include <cmath>

#include "dunkl/operators.hpp"

using namespace dunkl;

namespace {

Polynomial P(const char* text, std::size_t dim, Mode mode = Mode::exact) { return Polynomial::parse(text, dim, mode); }

DunklOperators make_ops(const char* preset, std::size_t n, std::vector<Scalar> k, unsigned m = 0,
                        Mode mode = Mode::exact) {
  return DunklOperators(DunklParams::make(builtin_preset(preset, n, m, mode), std::move(k), 6));
}

}  // namespace

TEST(Dunkl, RankOneClosedFormOnMonomials) {
  Scalar k = Scalar::rational(3, 2);
  DunklOperators ops = make_ops("Z2", 1, {k});
  for (unsigned n = 1; n <= 9; ++n) {
    Scalar c = Scalar(static_cast<long>(n)) + (n % 2 == 1 ? Scalar(2) * k : Scalar(0));
    Polynomial expected = Polynomial::monomial(Monomial{n - 1}, c);
    EXPECT_EQ(ops.dunkl(0).apply(Polynomial::monomial(Monomial{n}, Scalar(1))), expected) << n;
  }
}

TEST(Dunkl, OperatorsCommute) {
  for (auto ops : {make_ops("B", 2, {Scalar::rational(1, 2), Scalar(3)}), make_ops("A", 3, {Scalar::rational(5, 2)}),
                   make_ops("I2", 0, {Scalar(1), Scalar::rational(1, 3)}, 6)}) {
    for (const Monomial& m : basis_up_to(ops.dim(), 5)) {
      Polynomial x = Polynomial::monomial(m, Scalar(1));
      for (std::size_t i = 0; i < ops.dim(); ++i)
        for (std::size_t j = i + 1; j < ops.dim(); ++j)
          EXPECT_EQ(ops.dunkl(i).apply(ops.dunkl(j).apply(x)), ops.dunkl(j).apply(ops.dunkl(i).apply(x)))
              << m.to_string();
    }
  }
}

TEST(Dunkl, LaplacianRoutesAgree) {
  DunklOperators ops = make_ops("B", 2, {Scalar::rational(1, 2), Scalar(2)});
  for (const Monomial& m : basis_up_to(2, 6)) {
    Polynomial x = Polynomial::monomial(m, Scalar(1));
    EXPECT_EQ(laplacian_apply(ops, x, LaplacianRoute::sum_of_squares),
              laplacian_apply(ops, x, LaplacianRoute::reflection_form));
  }
}

TEST(Dunkl, LaplacianRoutesAgreeInFloatingMode) {
  DunklOperators ops = make_ops("I2", 0, {Scalar(0.75)}, 5, Mode::floating);
  for (const Monomial& m : basis_up_to(2, 4)) {
    Polynomial x = Polynomial::monomial(m, Scalar(1.0));
    Polynomial diff = laplacian_apply(ops, x) - laplacian_apply(ops, x, LaplacianRoute::reflection_form);
    EXPECT_LT(diff.max_abs_coefficient(), 1e-10) << m.to_string();
  }
}

TEST(Dunkl, ZeroMultiplicityGivesPartialDerivatives) {
  DunklOperators ops = make_ops("B", 2, {Scalar(0), Scalar(0)});
  Polynomial p = P("x1^3*x2 - x2^2 + x1", 2);
  EXPECT_EQ(ops.dunkl(0).apply(p), p.derivative(0));
  EXPECT_EQ(ops.dunkl(1).apply(p), p.derivative(1));
}

TEST(Dunkl, EquivariantUnderTheGroup) {
  // T_xi (f o g^{-1}) = (T_{g^{-1} xi} f) o g^{-1}.
  DunklOperators ops = make_ops("B", 2, {Scalar::rational(1, 2), Scalar(1)});
  const auto& grp = ops.params().group;
  Polynomial f = P("x1^3*x2 + 2*x1*x2 - x2^4 + x1", 2);
  Vector xi = {Scalar(2), Scalar(-1)};
  for (std::size_t gi = 0; gi < grp.order(); ++gi) {
    const Matrix& g = grp.element(gi);
    Matrix ginv = grp.element(grp.inverse(gi));
    Polynomial lhs = dunkl_apply(ops, xi, linear_substitute(f, g));
    Polynomial rhs = linear_substitute(dunkl_apply(ops, ginv * xi, f), g);
    EXPECT_EQ(lhs, rhs) << gi;
  }
}

TEST(Dunkl, DeltaIsScaleInvariantInTheRoot) {
  Vector a = {Scalar(1), Scalar(-1)};
  Vector b = {Scalar(-3), Scalar(3)};
  Polynomial p = P("x1^4 + x1*x2^2 - 3*x2", 2);
  EXPECT_EQ(delta_alpha_apply(a, p), delta_alpha_apply(b, p));
}

TEST(Operators, DegreeLoweringAndMatrix) {
  DunklOperators ops = make_ops("B", 2, {Scalar(1), Scalar(1)});
  EXPECT_TRUE(verify_degree_lowering(ops.dunkl(0), 5));
  EXPECT_TRUE(verify_degree_lowering(ops.laplacian_squares(), 5));
  EXPECT_FALSE(verify_degree_lowering(PolyOperator::identity(2, Mode::exact), 3));
  Matrix a = operator_matrix(ops.dunkl(1), 3);
  EXPECT_EQ(a.rows(), 10u);
  // Strictly upper block triangular: a power of the matrix vanishes.
  Matrix power = a;
  for (int i = 0; i < 3; ++i) power = power * a;
  EXPECT_TRUE(power.is_zero());
}

TEST(Operators, ExponentialAndResolvent) {
  PolyOperator d2 = second_derivative_1d();
  Polynomial p = P("x^4", 1);
  // e^{t D^2} x^4 = x^4 + 12 t x^2 + 12 t^2.
  EXPECT_EQ(exp_apply(d2, Scalar(2), p), P("x^4 + 24*x^2 + 48", 1));
  EXPECT_EQ(exp_apply(d2, Scalar(-2), exp_apply(d2, Scalar(2), p)), p);
  EXPECT_EQ(exp_operator(d2, Scalar(1)).apply(P("x^2", 1)), P("x^2 + 2", 1));
  Scalar lambda = Scalar(3);
  Polynomial r = resolvent_apply(d2, lambda, p);
  EXPECT_EQ(lambda * r - d2.apply(r), p);
  EXPECT_THROW(exp_apply(PolyOperator::identity(1, Mode::exact), Scalar(1), p), Error);
}

TEST(Operators, EulerAndTrotterConverge) {
  PolyOperator d2 = second_derivative_1d();
  PolyOperator delta = Scalar(2) * delta_1d();
  Polynomial p = P("x^6 + x^5", 1);
  Polynomial exact = exp_apply(d2 + delta, Scalar(1), p);
  double prev_e = 0, prev_t = 0;
  for (unsigned n : {4u, 8u, 16u}) {
    double e = (euler_approx(d2 + delta, n, p) - exact).as(Mode::floating).max_abs_coefficient();
    double t = (trotter_approx(d2, delta, n, p) - exact).as(Mode::floating).max_abs_coefficient();
    if (n > 4) {
      EXPECT_LT(e, 0.75 * prev_e);
      EXPECT_LT(t, 0.75 * prev_t);
    }
    prev_e = e;
    prev_t = t;
  }
}

TEST(OneVariable, SquareOfDunklOperator) {
  Scalar k = Scalar::rational(7, 3);
  DunklOperators ops = make_ops("Z2", 1, {k});
  PolyOperator rhs = second_derivative_1d() + (Scalar(2) * k) * delta_1d();
  for (unsigned n = 0; n <= 8; ++n) {
    Polynomial x = Polynomial::monomial(Monomial{n}, Scalar(1));
    EXPECT_EQ(ops.dunkl(0).apply(ops.dunkl(0).apply(x)), rhs.apply(x));
  }
  // delta x^n = n x^{n-2} (n even), (n-1) x^{n-2} (n odd).
  EXPECT_EQ(delta_1d().apply(P("x^4", 1)), P("4*x^2", 1));
  EXPECT_EQ(delta_1d().apply(P("x^5", 1)), P("4*x^3", 1));
  EXPECT_TRUE(delta_1d().apply(P("x", 1)).is_zero());
}

TEST(OneVariable, LambdaSolvesItsDifferentialEquations) {
  for (Scalar s : {Scalar::rational(1, 2), Scalar(1), Scalar(3)}) {
    for (const char* even : {"x^2", "x^4 - 3*x^2 + 1", "x^6"}) {
      Polynomial p = P(even, 1);
      EXPECT_TRUE(lambda_ode_residual(s, p, lambda_s_apply(s, p)).is_zero());
    }
    for (const char* odd : {"x", "x^3 + x", "x^5 - 2*x^3"}) {
      Polynomial p = P(odd, 1);
      EXPECT_TRUE(lambda_odd_residual(s, p, lambda_s_apply(s, p)).is_zero());
    }
  }
  Polynomial p = P("x^4", 1);
  EXPECT_FALSE(lambda_ode_residual(Scalar(1), p, lambda_s_apply(Scalar(1), p) + P("1", 1)).is_zero());
}

TEST(OneVariable, OdeSolveAndConjugationIdentity) {
  for (const char* odd : {"x", "x^3", "x^5 - x + 4*x^3"}) {
    Polynomial p = P(odd, 1);
    Scalar c = Scalar::rational(3, 2);
    Polynomial y = ode_poly_solve(c, p);
    Polynomial x = P("x", 1);
    EXPECT_EQ(c * y.derivative(0) - x * y, p);
    EXPECT_TRUE(exp_conjugate_identity_check(c, p).is_zero());
  }
  EXPECT_THROW(ode_poly_solve(Scalar(1), P("x^2", 1)), Error);
}

TEST(OneVariable, LambdaIntegralFormNeedsTheHalfWeight) {
  for (const char* text : {"x^2", "x^3 + x", "x^4 - x", "1"}) {
    Polynomial p = P(text, 1);
    Polynomial p_float = p.as(Mode::floating);
    Polynomial lam = lambda_s_apply(Scalar(1.0), p_float);
    for (double x : {-1.5, -0.3, 0.7, 2.0}) {
      double expected = lam.evaluate_double(std::span<const double>(&x, 1));
      EXPECT_NEAR(lambda_s_closed_form(1.0, p, x), expected, 1e-8) << text << " at " << x;
    }
  }
  // Without the factor 1/2 the constant 1 (with Lambda_s 1 = 0) maps to 1/(2s).
  EXPECT_NEAR(lambda_s_closed_form(2.0, P("1", 1), 0.4, 1.0), 0.25, 1e-10);
}

TEST(OneVariable, MinimumPrinciple) {
  PolyOperator lambda = lambda_s_operator(Scalar(1));
  Polynomial p = P("x^2", 1);
  auto v = minimum_principle_check(lambda, p, {Scalar(0)});
  EXPECT_TRUE(v.pass);
  EXPECT_THROW(minimum_principle_check(lambda, p, {Scalar(1)}), Error);
  PolyOperator neg = Scalar(-1) * lambda;
  EXPECT_FALSE(minimum_principle_check(neg, p, {Scalar(0)}).pass);
}
