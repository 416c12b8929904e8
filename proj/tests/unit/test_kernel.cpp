#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <boost/math/special_functions/hypergeometric_1F1.hpp>
#include <cmath>

#include "dunkl/kernel.hpp"
#include "dunkl/numerics.hpp"

using namespace dunkl;

namespace {

IntertwinerTable table_for(const char* preset, std::size_t n, std::vector<Scalar> k, unsigned n_max) {
  return build_vk(DunklParams::make(builtin_preset(preset, n, 0, Mode::exact), std::move(k), n_max));
}

Vector V(std::initializer_list<Scalar> xs) { return Vector(xs); }

ComplexVector real_point(std::initializer_list<Scalar> xs) { return ComplexVector::real(Vector(xs)); }
ComplexVector imag_point(std::initializer_list<Scalar> xs) { return ComplexVector::imaginary(Vector(xs)); }

}  // namespace

TEST(Kernel, ZeroArgumentAndOrderZero) {
  KernelTruncation tr(table_for("B", 2, {Scalar(1), Scalar::rational(1, 2)}, 6));
  KernelValue v = kernel_eval(tr, V({Scalar(1), Scalar(-2)}), real_point({Scalar(0), Scalar(0)}));
  EXPECT_EQ(v.exact.re, Scalar(1));
  EXPECT_TRUE(v.exact.im.is_zero());
  EXPECT_EQ(v.tail_bound, 0.0);
  KernelTruncation t0(tr.table(), 0);
  EXPECT_EQ(t0.evaluate(V({Scalar(3), Scalar(1)}), real_point({Scalar(5), Scalar(7)})).re, Scalar(1));
  EXPECT_THROW(KernelTruncation(tr.table(), 7), Error);
}

TEST(Kernel, ClassicalCaseIsExponentialPartialSum) {
  KernelTruncation tr(table_for("Z2", 1, {Scalar(0)}, 10));
  ComplexScalar v = tr.evaluate(V({Scalar(1)}), real_point({Scalar::rational(1, 2)}));
  Scalar expected(0);
  for (unsigned n = 0; n <= 10; ++n) expected += Scalar::rational(1, 2).pow(n) / factorial(n, Mode::exact);
  EXPECT_EQ(v.re, expected);
  KernelValue b = bessel_eval(tr, V({Scalar(1)}), real_point({Scalar::rational(1, 2)}));
  Scalar cosh_sum(0);
  for (unsigned n = 0; n <= 10; n += 2) cosh_sum += Scalar::rational(1, 2).pow(n) / factorial(n, Mode::exact);
  EXPECT_EQ(b.exact.re, cosh_sum);
}

TEST(Kernel, RankOneMatchesConfluentClosedForm) {
  KernelTruncation tr(table_for("Z2", 1, {Scalar(1)}, 30));
  for (int num = -8; num <= 8; ++num) {
    Scalar xy = Scalar::rational(num, 4);
    KernelValue v = kernel_eval(tr, V({Scalar(1)}), real_point({xy}));
    double t = xy.to_double();
    std::complex<double> closed = rank_one_kernel_closed(1.0, t);
    double boost_value = std::exp(t) * boost::math::hypergeometric_1F1(1.0, 3.0, -2.0 * t);
    EXPECT_NEAR(closed.real(), boost_value, 1e-13 * std::max(1.0, std::abs(boost_value)));
    EXPECT_NEAR(v.value.real(), boost_value, 1e-10) << "xy = " << t;
    EXPECT_LT(v.tail_bound, 1e-20);
  }
  double ref = std::exp(1.0) * boost::math::hypergeometric_1F1(1.0, 3.0, -2.0);
  EXPECT_NEAR(kernel_eval(tr, V({Scalar(1)}), real_point({Scalar(1)})).value.real(), ref, 1e-12);
}

TEST(Kernel, ImaginaryArgumentClosedForm) {
  KernelTruncation tr(table_for("Z2", 1, {Scalar::rational(1, 2)}, 30));
  for (int num : {-4, -1, 2, 4}) {
    Scalar y = Scalar::rational(num, 2);
    KernelValue v = kernel_eval(tr, V({Scalar(1)}), imag_point({y}));
    std::complex<double> closed = rank_one_kernel_closed(0.5, {0.0, y.to_double()});
    EXPECT_NEAR(std::abs(v.value - closed), 0.0, 1e-10);
    // J(x, iy) = Re K(x, iy) for Z2.
    KernelValue j = bessel_eval(tr, V({Scalar(1)}), imag_point({y}));
    EXPECT_TRUE(j.exact.im.is_zero());
    EXPECT_EQ(j.exact.re, v.exact.re);
  }
}

TEST(Kernel, ProductStructureOnZ2Squared) {
  std::vector<Scalar> k{Scalar(1), Scalar::rational(1, 2)};
  KernelTruncation t2(table_for("Z2", 2, k, 12));
  KernelTruncation ta(table_for("Z2", 1, {k[0]}, 12));
  KernelTruncation tb(table_for("Z2", 1, {k[1]}, 12));
  // Homogeneous terms factor exactly.
  Vector x{Scalar::rational(1, 2), Scalar(-1)};
  Vector y{Scalar(2), Scalar::rational(1, 3)};
  for (unsigned n = 0; n <= 6; ++n) {
    Polynomial lhs = t2.homogeneous_term(n, y);
    Scalar expected(0);
    for (unsigned a = 0; a <= n; ++a)
      expected += ta.homogeneous_term(a, {y[0]}).evaluate(std::vector<Scalar>{x[0]}) *
                  tb.homogeneous_term(n - a, {y[1]}).evaluate(std::vector<Scalar>{x[1]});
    EXPECT_EQ(lhs.evaluate(x), expected) << "degree " << n;
  }
}

TEST(Kernel, SymmetricInItsArgumentsPerDegree) {
  for (auto t : {table_for("B", 2, {Scalar(1), Scalar::rational(1, 2)}, 6),
                 table_for("A", 3, {Scalar::rational(5, 2)}, 5)}) {
    KernelTruncation tr(t);
    Vector x(t.dim()), y(t.dim());
    for (std::size_t i = 0; i < t.dim(); ++i) {
      x[i] = Scalar::rational(static_cast<long>(i) + 1, 3);
      y[i] = Scalar::rational(2 - static_cast<long>(i), 5);
    }
    for (unsigned n = 0; n <= tr.order(); ++n)
      EXPECT_EQ(tr.homogeneous_term(n, y).evaluate(x), tr.homogeneous_term(n, x).evaluate(y)) << n;
  }
}

TEST(Kernel, RecursionResidualVanishes) {
  for (auto t : {table_for("B", 2, {Scalar(1), Scalar::rational(1, 2)}, 6), table_for("Z2", 1, {Scalar(1)}, 6),
                 table_for("A", 3, {Scalar(1)}, 5)}) {
    DunklOperators ops(t.params());
    KernelTruncation tr(t);
    Vector y(t.dim()), xi(t.dim());
    for (std::size_t i = 0; i < t.dim(); ++i) {
      y[i] = Scalar::rational(static_cast<long>(2 * i) + 1, 2);
      xi[i] = Scalar(static_cast<long>(i) - 1);
    }
    for (unsigned n = 0; n + 1 <= tr.order(); ++n)
      EXPECT_TRUE(kernel_recursion_residual(ops, tr, xi, y, n).is_zero()) << n;
  }
}

TEST(Kernel, RecursionResidualSeesCorruptTable) {
  IntertwinerTable t = table_for("Z2", 1, {Scalar(1)}, 4);
  DunklOperators ops(t.params());
  KernelTruncation bad(t.with_entry(3, 0, 0, Scalar(1)));
  EXPECT_FALSE(kernel_recursion_residual(ops, bad, V({Scalar(1)}), V({Scalar(1)}), 2).is_zero());
}

TEST(Kernel, BesselIsGroupInvariant) {
  IntertwinerTable t = table_for("B", 2, {Scalar(1), Scalar::rational(1, 2)}, 6);
  KernelTruncation tr(t);
  Vector x{Scalar::rational(1, 3), Scalar::rational(-1, 2)};
  ComplexVector y = imag_point({Scalar(1), Scalar::rational(1, 4)});
  KernelValue base = bessel_eval(tr, x, y);
  for (const auto& g : t.params().group.elements()) {
    EXPECT_EQ(bessel_eval(tr, g * x, y).exact.re, base.exact.re);
    EXPECT_EQ(bessel_eval(tr, x, {g * y.re, g * y.im}).exact.im, base.exact.im);
  }
}

TEST(Kernel, BoundHoldsOnGrid) {
  KernelTruncation tr(table_for("Z2", 1, {Scalar(1)}, 40));
  for (int a = -4; a <= 4; ++a)
    for (int b = -4; b <= 4; ++b) {
      Vector x{Scalar::rational(a, 2)};
      for (const ComplexVector& z : {imag_point({Scalar::rational(b, 2)}), real_point({Scalar::rational(b, 2)})})
        for (const Monomial& nu : {Monomial{0}, Monomial{1}}) {
          BoundVerdict v = kernel_bound_check(tr, x, z, nu);
          EXPECT_TRUE(v.pass) << a << " " << b << " margin " << v.margin;
        }
      BoundVerdict iy = kernel_bound_check(tr, x, imag_point({Scalar::rational(b, 2)}), Monomial{0});
      EXPECT_LE(iy.value, 1 + 1e-10);
    }
  KernelTruncation short_tr(tr.table(), 5);
  EXPECT_THROW(kernel_bound_check(short_tr, V({Scalar(2)}), imag_point({Scalar(2)}), Monomial{0}), TailTooLarge);
}

TEST(Kernel, GramMatrixIsPositiveSemidefinite) {
  KernelTruncation tr(table_for("Z2", 1, {Scalar(1)}, 40));
  std::vector<Vector> pts;
  for (int i = -2; i <= 2; ++i) pts.push_back({Scalar::rational(i, 2)});
  GramResult g = gram_psd_check(tr, pts, V({Scalar(1)}));
  EXPECT_TRUE(g.pass);
  EXPECT_GE(g.lambda_min, -1e-8);
  GramResult one = gram_psd_check(tr, {V({Scalar(1)})}, V({Scalar(1)}));
  EXPECT_NEAR(one.lambda_min, 1.0, 1e-12);
  EXPECT_TRUE(gram_psd_check(tr, pts, V({Scalar(1)}), 1e-8, true).pass);
}

TEST(Kernel, GramMinimumEigenvalueMatchesEigen) {
  IntertwinerTable t = table_for("B", 2, {Scalar(1), Scalar::rational(1, 2)}, 16);
  KernelTruncation tr(t);
  std::vector<Vector> pts{{Scalar(0), Scalar(0)},
                          {Scalar::rational(1, 4), Scalar(0)},
                          {Scalar(0), Scalar::rational(1, 2)},
                          {Scalar::rational(-1, 4), Scalar::rational(1, 4)},
                          {Scalar::rational(1, 2), Scalar::rational(-1, 2)}};
  Vector y{Scalar(1), Scalar::rational(1, 2)};
  GramResult g = gram_psd_check(tr, pts, y);
  Eigen::MatrixXcd m(pts.size(), pts.size());
  ComplexVector iy = ComplexVector::imaginary(y);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < pts.size(); ++j) m(i, j) = kernel_eval(tr, pts[i] - pts[j], iy).value;
  Eigen::MatrixXcd h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  EXPECT_NEAR(g.lambda_min, es.eigenvalues().minCoeff(), 1e-12);
  EXPECT_TRUE(g.pass);
  // Classical kernel: rank one, smallest eigenvalue 0.
  KernelTruncation t0(table_for("Z2", 1, {Scalar(0)}, 40));
  GramResult g0 = gram_psd_check(t0, {V({Scalar(0)}), V({Scalar(1)}), V({Scalar::rational(1, 3)})}, V({Scalar(1)}));
  EXPECT_NEAR(g0.lambda_min, 0.0, 1e-12);
}

TEST(Measure, RankOneMoments) {
  Measure1D mu{Scalar(1), Scalar(1)};
  EXPECT_NEAR(measure_moments(mu, 0), 1.0, 1e-13);
  EXPECT_NEAR(measure_moments(mu, 1), 1.0 / 3, 1e-13);
  EXPECT_EQ(mu.moment_exact(1), Scalar::rational(1, 3));
  Measure1D mu2{Scalar(2), Scalar(1)};
  EXPECT_NEAR(measure_moments(mu2, 2), 4.0 / 3, 1e-12);
  EXPECT_EQ(mu2.moment_exact(2), Scalar::rational(4, 3));
  Measure1D dirac{Scalar(3), Scalar(0)};
  EXPECT_EQ(dirac.moment_exact(2), Scalar(9));
  EXPECT_EQ(dirac.support().first, Scalar(3));
}

TEST(Measure, MomentsMatchTable) {
  for (Scalar k : {Scalar::rational(1, 2), Scalar(1), Scalar::rational(5, 2)}) {
    IntertwinerTable t = table_for("Z2", 1, {k}, 6);
    for (Scalar x : {Scalar(1), Scalar::rational(-3, 2), Scalar::rational(1, 3)}) {
      Measure1D mu{x, k};
      for (unsigned n = 0; n <= 6; ++n) {
        Scalar m = t.image(Monomial{n}).evaluate(std::vector<Scalar>{x});
        EXPECT_EQ(mu.moment_exact(n), m);
        EXPECT_NEAR(mu.moment(n), m.to_double(), 1e-10);
      }
    }
  }
  std::vector<Scalar> k{Scalar(1), Scalar::rational(5, 2)};
  IntertwinerTable t2 = table_for("Z2", 2, k, 6);
  Vector x{Scalar::rational(1, 2), Scalar(-2)};
  ProductMeasure mu = ProductMeasure::at(k, x);
  for (const auto& nu : basis_up_to(2, 6)) {
    Scalar m = t2.image(nu).evaluate(x);
    EXPECT_EQ(mu.moment_exact(nu), m);
    EXPECT_NEAR(measure_moments(mu, nu), m.to_double(), 1e-10 * std::max(1.0, std::abs(m.to_double())));
  }
}

TEST(Measure, ScalingAndEquivariance) {
  IntertwinerTable t1 = table_for("Z2", 1, {Scalar(1)}, 6);
  Matrix flip(1, 1, Mode::exact);
  flip(0, 0) = Scalar(-1);
  TransformVerdict v = measure_transform_check(t1, V({Scalar(1)}), Scalar(2), flip);
  EXPECT_TRUE(v.pass);
  EXPECT_TRUE(v.exact_identities);
  EXPECT_TRUE(measure_transform_check(t1, V({Scalar(1)}), Scalar(1), Matrix::identity(1, Mode::exact)).pass);

  IntertwinerTable t2 = table_for("Z2", 2, {Scalar::rational(1, 2), Scalar(1)}, 6);
  for (const auto& g : t2.params().group.elements())
    EXPECT_TRUE(measure_transform_check(t2, V({Scalar::rational(1, 2), Scalar(-1)}), Scalar::rational(3, 2), g).pass);

  Matrix swap(2, 2, Mode::exact);
  swap(0, 1) = Scalar(1);
  swap(1, 0) = Scalar(1);
  EXPECT_THROW(measure_transform_check(t2, V({Scalar(1), Scalar(1)}), Scalar(1), swap), Error);
}

TEST(Measure, SupportInOrbitHull) {
  DunklParams z2 = DunklParams::make(builtin_preset("Z2", 1, 0, Mode::exact), {Scalar(1)}, 4);
  HullVerdict h1 = support_hull_check(z2, V({Scalar(1)}));
  EXPECT_TRUE(h1.pass);
  EXPECT_EQ(h1.support[0].first, Scalar(-1));
  EXPECT_EQ(h1.support[0].second, Scalar(1));

  DunklParams z22 = DunklParams::make(builtin_preset("Z2", 2, 0, Mode::exact), {Scalar(1), Scalar(1)}, 4);
  HullVerdict h2 = support_hull_check(z22, V({Scalar(1), Scalar(2)}));
  EXPECT_TRUE(h2.pass);
  EXPECT_EQ(h2.orbit.size(), 4u);
  EXPECT_EQ(h2.support[1].first, Scalar(-2));

  HullVerdict h0 = support_hull_check(z22, V({Scalar(0), Scalar(0)}));
  EXPECT_TRUE(h0.pass);
  EXPECT_EQ(h0.orbit.size(), 1u);
  EXPECT_EQ(h0.support[0].first, h0.support[0].second);

  DunklParams b2 = DunklParams::make(builtin_preset("B", 2, 0, Mode::exact), {Scalar(1), Scalar(1)}, 4);
  EXPECT_THROW(support_hull_check(b2, V({Scalar(1), Scalar(2)})), Error);
}
