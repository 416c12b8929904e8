#include <gtest/gtest.h>

#include "dunkl/reflection.hpp"

using namespace dunkl;

namespace {

struct OrderCase {
  const char* preset;
  std::size_t n;
  unsigned m;
  Mode mode;
  std::size_t order;
  std::size_t roots;
  std::size_t orbits;
};

class PresetOrder : public ::testing::TestWithParam<OrderCase> {};

}  // namespace

TEST_P(PresetOrder, MatchesKnownGroupOrder) {
  const OrderCase& c = GetParam();
  RootSystem rs = builtin_preset(c.preset, c.n, c.m, c.mode);
  EXPECT_EQ(rs.size(), c.roots);
  EXPECT_EQ(rs.orbit_count(), c.orbits);
  ReflectionGroup g = build_group(rs);
  EXPECT_EQ(g.order(), c.order);
  // Each positive root gives exactly one reflection.
  EXPECT_EQ(g.reflections().size(), c.roots);
  for (std::size_t i = 0; i < g.order(); ++i) {
    EXPECT_TRUE(is_orthogonal(g.element(i), 1e-9));
    EXPECT_TRUE((g.element(i) * g.element(g.inverse(i))).approx_equal(Matrix::identity(rs.dim(), rs.mode()), 1e-9));
  }
}

INSTANTIATE_TEST_SUITE_P(
    Groups, PresetOrder,
    ::testing::Values(OrderCase{"Z2", 1, 0, Mode::exact, 2, 1, 1}, OrderCase{"Z2", 3, 0, Mode::exact, 8, 3, 3},
                      OrderCase{"A", 3, 0, Mode::exact, 6, 3, 1}, OrderCase{"A", 4, 0, Mode::exact, 24, 6, 1},
                      OrderCase{"B", 2, 0, Mode::exact, 8, 4, 2}, OrderCase{"B", 3, 0, Mode::exact, 48, 9, 2},
                      OrderCase{"D", 3, 0, Mode::exact, 24, 6, 1}, OrderCase{"D", 4, 0, Mode::exact, 192, 12, 1},
                      OrderCase{"I2", 0, 2, Mode::exact, 4, 2, 2}, OrderCase{"I2", 0, 3, Mode::exact, 6, 3, 1},
                      OrderCase{"I2", 0, 4, Mode::exact, 8, 4, 2}, OrderCase{"I2", 0, 6, Mode::exact, 12, 6, 2},
                      OrderCase{"I2", 0, 5, Mode::floating, 10, 5, 1},
                      OrderCase{"I2", 0, 8, Mode::floating, 16, 8, 2}));

TEST(RootSystem, RootsAreClosedUnderReflections) {
  RootSystem rs = builtin_preset("B", 3, 0, Mode::exact);
  for (const auto& a : rs.roots())
    for (const auto& b : rs.roots()) EXPECT_TRUE(rs.find(reflect(a, b)).has_value());
}

TEST(RootSystem, B2OrbitsSeparateShortAndLongRoots) {
  RootSystem rs = builtin_preset("B", 2, 0, Mode::exact);
  ASSERT_EQ(rs.orbit_count(), 2u);
  for (std::size_t i : rs.orbits()[0]) EXPECT_EQ(rs.squared_length(i), Scalar(1));
  for (std::size_t i : rs.orbits()[1]) EXPECT_EQ(rs.squared_length(i), Scalar(2));
}

TEST(RootSystem, RejectsInvalidInput) {
  // e1 and e1 + e2 alone are not closed (reflecting gives e2).
  std::vector<Vector> open = {{Scalar(1), Scalar(0)}, {Scalar(1), Scalar(1)}};
  EXPECT_THROW(RootSystem::from_positive_roots(open), Error);
  std::vector<Vector> par = {{Scalar(1), Scalar(0)}, {Scalar(-2), Scalar(0)}};
  EXPECT_THROW(RootSystem::from_positive_roots(par), Error);
  std::vector<Vector> zero = {{Scalar(0), Scalar(0)}};
  EXPECT_THROW(RootSystem::from_positive_roots(zero), Error);
  EXPECT_THROW(builtin_preset("I2", 0, 5, Mode::exact), Error);
  EXPECT_THROW(builtin_preset("E", 8, 0, Mode::exact), Error);
}

TEST(RootSystem, ScaledRepresentativesGiveTheSameGroup) {
  std::vector<Vector> scaled = {{Scalar(2), Scalar(0)}, {Scalar(0), Scalar(3)}, {Scalar(1), Scalar(-1)},
                                {Scalar(5), Scalar(5)}};
  RootSystem rs = RootSystem::from_positive_roots(scaled);
  EXPECT_EQ(build_group(rs).order(), 8u);
}

TEST(ReflectionGroup, ClosureBoundIsEnforced) {
  RootSystem rs = builtin_preset("B", 3, 0, Mode::exact);
  EXPECT_THROW(build_group(rs, 10), ClosureBoundExceeded);
}

TEST(MultiplicityFunction, IsConstantOnOrbits) {
  RootSystem rs = builtin_preset("B", 2, 0, Mode::exact);
  MultiplicityFunction k(rs, {Scalar::rational(1, 2), Scalar(3)});
  for (std::size_t i = 0; i < rs.size(); ++i) EXPECT_EQ(k(i), k.orbit_values()[rs.orbit_of(i)]);
  EXPECT_EQ(k.gamma(), Scalar(7));
  EXPECT_TRUE(k.nonnegative());
  EXPECT_THROW(MultiplicityFunction(rs, {Scalar(1)}), Error);
}
