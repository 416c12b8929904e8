#include <gtest/gtest.h>

#include <cmath>

#include "dunkl/pairing.hpp"

using namespace dunkl;

namespace {

Polynomial P(const char* text, std::size_t dim, Mode mode = Mode::exact) { return Polynomial::parse(text, dim, mode); }

DunklOperators ops_for(const char* preset, std::size_t n, std::vector<Scalar> k, unsigned n_max = 6) {
  return DunklOperators(DunklParams::make(builtin_preset(preset, n, 0, Mode::exact), std::move(k), n_max));
}

}  // namespace

TEST(Pairing, RankOneValues) {
  for (Scalar k : {Scalar::rational(1, 2), Scalar(1), Scalar::rational(5, 2)}) {
    DunklOperators ops = ops_for("Z2", 1, {k});
    EXPECT_EQ(pairing(ops, P("x", 1), P("x", 1)), Scalar(1) + Scalar(2) * k);
    EXPECT_EQ(pairing(ops, P("x^2", 1), P("x^2", 1)), Scalar(2) * (Scalar(1) + Scalar(2) * k));
    EXPECT_EQ(pairing(ops, P("1", 1), P("1", 1)), Scalar(1));
    EXPECT_EQ(pairing(ops, P("x^3", 1), P("x^2", 1)), Scalar(0));
  }
}

TEST(Pairing, SymmetricAndIdentityOnBases) {
  for (auto ops : {ops_for("B", 2, {Scalar(1), Scalar::rational(1, 2)}), ops_for("A", 3, {Scalar::rational(5, 2)})}) {
    IntertwinerTable t = build_vk(ops, 4);
    auto basis = basis_up_to(ops.dim(), 4);
    for (const Monomial& a : basis)
      for (const Monomial& b : basis) {
        Polynomial p = Polynomial::monomial(a, Scalar(1));
        Polynomial q = Polynomial::monomial(b, Scalar(1));
        EXPECT_EQ(pairing(ops, p, q), pairing(ops, q, p));
        if (a.degree() != b.degree()) EXPECT_TRUE(pairing(ops, p, q).is_zero());
        EXPECT_TRUE(pairing_identity_residual(ops, t, p, q).is_zero());
      }
  }
}

TEST(Pairing, ClassicalPairing) {
  EXPECT_EQ(pairing_classical(P("x1^2*x2 + 3", 2), P("2*x1^2*x2 + x1", 2)), Scalar(2 * 2 + 0));
  DunklOperators zero = ops_for("B", 2, {Scalar(0), Scalar(0)});
  Polynomial p = P("x1^3 + 2*x1*x2 - x2^2", 2);
  Polynomial q = P("x1^3 - x1*x2 + 4*x2^2", 2);
  EXPECT_EQ(pairing(zero, p, q), pairing_classical(p, q));
}

TEST(Pairing, PositivityOnRandomishPolynomials) {
  DunklOperators ops = ops_for("B", 2, {Scalar(1), Scalar::rational(1, 2)});
  for (const char* text : {"x1^2 - 3*x1*x2 + 2", "x1^4 - x2^3 + 7/3*x1", "5", "x1*x2^3 - x1^3*x2"}) {
    auto v = pairing_positivity_check(ops, P(text, 2));
    EXPECT_TRUE(v.pass) << text;
  }
  EXPECT_EQ(pairing_positivity_check(ops, P("3", 2)).value, Scalar(9));
}

TEST(Pairing, GaussianIntegralMatchesExactPairing) {
  for (double kd : {0.5, 1.0, 2.5}) {
    Scalar k = Scalar(kd).as(Mode::exact);
    for (std::size_t dim : {1u, 2u}) {
      DunklOperators ops = ops_for("Z2", dim, std::vector<Scalar>(dim, k), 4);
      auto basis = basis_up_to(dim, 4);
      for (std::size_t a = 0; a < basis.size(); a += 2)
        for (std::size_t b = a; b < basis.size(); b += 3) {
          Polynomial p = Polynomial::monomial(basis[a], Scalar(1)) + P("1", dim);
          Polynomial q = Polynomial::monomial(basis[b], Scalar(1));
          double exact = pairing(ops, p, q).to_double();
          GaussianPairing g = gaussian_pairing_quadrature(ops, p, q);
          EXPECT_TRUE(g.converged);
          EXPECT_NEAR(g.value, exact, 1e-8 * std::max(1.0, std::abs(exact)))
              << "k=" << kd << " p=" << p.to_string() << " q=" << q.to_string();
        }
    }
  }
}

TEST(Pairing, GaussianNormalizationAndClassicalCase) {
  DunklOperators ops = ops_for("Z2", 1, {Scalar(1)});
  EXPECT_NEAR(gaussian_pairing_quadrature(ops, P("1", 1), P("1", 1)).value, 1.0, 1e-12);
  EXPECT_NEAR(gaussian_pairing_quadrature(ops, P("x", 1), P("x", 1)).value, 3.0, 1e-8);
  // w_1 = x^2 on Z2: int e^{-x^2/2} x^2 dx = sqrt(2 pi).
  EXPECT_NEAR(gaussian_pairing_quadrature(ops, P("1", 1), P("1", 1)).c_gauss, 1 / std::sqrt(2 * M_PI), 1e-12);
  DunklOperators zero = ops_for("Z2", 1, {Scalar(0)});
  EXPECT_NEAR(gaussian_pairing_quadrature(zero, P("x^2", 1), P("x^2", 1)).value, 2.0, 1e-10);
}

TEST(Pairing, GaussianFormIsIndependentOfRootRepresentatives) {
  Scalar k = Scalar::rational(3, 2);
  DunklOperators unit(DunklParams::make(builtin_preset("Z2", 2, 0, Mode::exact), {k, k}, 4));
  std::vector<Vector> scaled_roots = {{Scalar(3), Scalar(0)}, {Scalar(0), Scalar::rational(1, 2)}};
  DunklOperators scaled(DunklParams::make(RootSystem::from_positive_roots(scaled_roots), {k, k}, 4));
  Polynomial p = P("x1^2*x2 + x2 - 1", 2);
  Polynomial q = P("x1^2*x2 + 3*x2", 2);
  EXPECT_EQ(pairing(unit, p, q), pairing(scaled, p, q));
  auto a = gaussian_pairing_quadrature(unit, p, q);
  auto b = gaussian_pairing_quadrature(scaled, p, q);
  EXPECT_NEAR(a.value, b.value, 1e-9 * std::abs(a.value));
  EXPECT_GT(std::abs(a.c_gauss - b.c_gauss), 1e-3);
}

TEST(Pairing, WeightIsInvariant) {
  RootSystem rs = builtin_preset("B", 2, 0, Mode::exact);
  MultiplicityFunction k(rs, {Scalar::rational(1, 2), Scalar(1)});
  WeightData w(rs, k);
  ReflectionGroup g = build_group(rs);
  std::vector<double> x = {0.3, -1.7};
  for (const Matrix& m : g.elements()) {
    std::vector<double> gx(2, 0.0);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) gx[i] += m(i, j).to_double() * x[j];
    EXPECT_NEAR(w(gx), w(x), 1e-12);
  }
  EXPECT_GE(w(x), 0.0);
}
