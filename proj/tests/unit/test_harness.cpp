#include <gtest/gtest.h>

#include "dunkl/harness/samples.hpp"
#include "dunkl/harness/suites.hpp"

using namespace dunkl;
using namespace dunkl::harness;
using nlohmann::json;

namespace {

Config cfg(const char* text) { return Config::parse(json::parse(text)); }

Config z2_config(const char* k = "1", unsigned n_max = 6) {
  json j = {{"group", {{"preset", "Z2"}, {"N", 1}}}, {"multiplicity", {{"orbit_values", {k}}}}, {"n_max", n_max}};
  return Config::parse(j);
}

Config b2_config() { return cfg(R"({"group": {"preset": "B", "N": 2}, "multiplicity": {"orbit_values": ["1", "1/2"]}})"); }

SuiteOptions quiet(bool fault = false) {
  SuiteOptions o;
  o.timing = false;
  o.inject_fault = fault;
  return o;
}

}  // namespace

TEST(Config, ParsesPresetsAndCustomRoots) {
  Config b2 = b2_config();
  EXPECT_EQ(b2.root_system().size(), 4u);
  EXPECT_EQ(b2.multiplicities()[1], Scalar::rational(1, 2));
  EXPECT_EQ(b2.n_max, 6u);
  Config custom = cfg(R"({"group": {"positive_roots": [["1", "-1", "0"], ["1", "0", "-1"], ["0", "1", "-1"]]},
                          "multiplicity": {"orbit_values": [2.5]}, "mode": "exact", "seed": 7})");
  EXPECT_EQ(custom.params().group.order(), 6u);
  EXPECT_EQ(custom.multiplicities()[0], Scalar::rational(5, 2));
  EXPECT_EQ(custom.seed, 7u);
  Config i2 = cfg(R"({"group": {"preset": "I2", "m": 5}, "multiplicity": {"orbit_values": [1]}, "mode": "float"})");
  EXPECT_EQ(i2.params().group.order(), 10u);
  // Round trip.
  EXPECT_EQ(Config::parse(b2.to_json()).to_json(), b2.to_json());
}

TEST(Config, RejectsMalformedInput) {
  EXPECT_THROW(cfg(R"([1, 2])"), ConfigError);
  EXPECT_THROW(cfg(R"({"multiplicity": {"orbit_values": [1]}})"), ConfigError);
  EXPECT_THROW(cfg(R"({"group": {"preset": "B", "N": 2}, "multiplicity": {"orbit_values": [1]}})"), ConfigError);
  EXPECT_THROW(cfg(R"({"group": {"preset": "Q", "N": 2}, "multiplicity": {"orbit_values": [1]}})"), ConfigError);
  EXPECT_THROW(cfg(R"({"group": {"preset": "I2", "m": 5}, "multiplicity": {"orbit_values": [1]}})"), ConfigError);
  EXPECT_THROW(cfg(R"({"group": {"preset": "Z2", "N": 1}, "multiplicity": {"orbit_values": [1]}, "modes": "x"})"),
               ConfigError);
  EXPECT_THROW(cfg(R"({"group": {"preset": "Z2", "N": 1}, "multiplicity": {"orbit_values": ["1/0"]}})"), ConfigError);
  EXPECT_THROW(cfg(R"({"group": {"positive_roots": [["1", "1"], ["1", "0"]]}, "multiplicity": {"orbit_values": [1]}})"),
               ConfigError);
  EXPECT_THROW(Config::load("/nonexistent/config.json"), ConfigError);
}

TEST(Samples, FamilyIsNonnegativeAndDeterministic) {
  FamilySpec spec;
  auto a = nonnegative_family(2, spec, 11);
  auto b = nonnegative_family(2, spec, 11);
  auto c = nonnegative_family(2, spec, 12);
  ASSERT_EQ(a.size(), 50u);
  bool differs = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].p, b[i].p);
    EXPECT_LE(a[i].p.degree(), 6);
    differs = differs || !(a[i].p == c[i].p);
  }
  EXPECT_TRUE(differs);
  EXPECT_EQ(a[0].p, Polynomial::parse("(x1 - 1)^2", 2));
  EXPECT_EQ(a[2].p, Polynomial::parse("x1^2*x2^2", 2));
  DyadicGrid grid = ball_grid(2, 3);
  for (const auto& m : a) EXPECT_TRUE(scan_grid(m.p, grid).nonnegative) << m.construction;
}

TEST(Samples, GridSizesAndExactEvaluation) {
  EXPECT_GE(ball_grid(1).size(), 1000u);
  EXPECT_GE(ball_grid(2).size(), 1000u);
  EXPECT_GE(ball_grid(3).size(), 1000u);
  EXPECT_EQ(ball_grid(1).size(), 1025u);
  DyadicGrid g = ball_grid(2, 2);
  for (std::size_t i = 0; i < g.size(); ++i) EXPECT_LE(norm_squared(g.point(i)), Scalar(4));
  Polynomial p = Polynomial::parse("1/3*x1^3 - 5/7*x1*x2 + 2", 2);
  GridEvaluator ev(p, g.shift());
  for (std::size_t i = 0; i < g.size(); i += 7) EXPECT_EQ(Scalar(ev.value(g.numerators(i))), p.evaluate(g.point(i)));
  // Scalar overflow of the machine-word path falls back to big integers.
  Polynomial big = Polynomial::parse("x1^12", 1);
  DyadicGrid fine = ball_grid(1, 10);
  GridEvaluator eb(big, fine.shift());
  EXPECT_EQ(Scalar(eb.value(fine.numerators(0))), Scalar(4096));
  GridScan s = scan_grid(Polynomial::parse("x1^2 - 1", 1), ball_grid(1));
  EXPECT_FALSE(s.nonnegative);
  EXPECT_EQ(Scalar(s.min_value), Scalar(-1));
}

TEST(Report, SchemaAndVerdict) {
  Report r;
  r.suite = "demo";
  EXPECT_FALSE(r.pass());
  Check c;
  c.name = "a";
  c.expected_provenance = provenance::identity;
  c.residual = "0";
  c.pass = true;
  r.add(c);
  EXPECT_TRUE(r.pass());
  c.pass = false;
  c.margin = -1;
  r.add(c);
  EXPECT_FALSE(r.pass());
  json j = r.to_json();
  EXPECT_EQ(j["suite"], "demo");
  EXPECT_EQ(j["checks"].size(), 2u);
  EXPECT_TRUE(j["checks"][0].contains("residual"));
  EXPECT_TRUE(j["checks"][1].contains("margin"));
  EXPECT_FALSE(j["pass"].get<bool>());
  EXPECT_TRUE(j.contains("wall_ms"));
}

TEST(Suites, IdentitiesPassAndFaultFails) {
  Report ok = suite_identities(b2_config(), quiet());
  EXPECT_TRUE(ok.pass()) << ok.dump();
  Report z = suite_identities(z2_config("5/2"), quiet());
  EXPECT_TRUE(z.pass()) << z.dump();
  Report bad = suite_identities(b2_config(), quiet(true));
  EXPECT_FALSE(bad.pass());
  bool witnessed = false;
  for (const auto& c : bad.checks)
    if (c.name == "intertwining_relation") witnessed = !c.pass && c.detail.contains("witness");
  EXPECT_TRUE(witnessed);
}

TEST(Suites, IdentitiesNeedExactMode) {
  Config c = z2_config();
  c.mode = Mode::floating;
  EXPECT_THROW(suite_identities(c, quiet()), ConfigError);
}

TEST(Suites, PositivityOnRankOne) {
  Report ok = suite_positivity_vk(z2_config("1"), quiet());
  EXPECT_TRUE(ok.pass());
  EXPECT_EQ(ok.checks.size(), 51u);
  // V_1 (x - 1)^2 = x^2/3 - 2x/3 + 1 has minimum 2/3 at x = 1.
  EXPECT_EQ(ok.checks[1].residual.value(), "2/3");
  Report classical = suite_positivity_vk(z2_config("0"), quiet());
  EXPECT_TRUE(classical.pass());
  EXPECT_FALSE(suite_positivity_vk(z2_config("1"), quiet(true)).pass());
  EXPECT_THROW(suite_positivity_vk(z2_config("-1/4"), quiet()), ConfigError);
}

TEST(Suites, SemigroupPositivityOnRankOne) {
  Report ok = suite_semigroup_positivity(z2_config("1"), quiet());
  EXPECT_TRUE(ok.pass()) << ok.dump();
  EXPECT_EQ(ok.checks.size(), 16u + 1u + 3u);
  EXPECT_FALSE(suite_semigroup_positivity(z2_config("1"), quiet(true)).pass());
}

TEST(Suites, ReportsAreDeterministic) {
  Config c = z2_config("1/2");
  EXPECT_EQ(suite_positivity_vk(c, quiet()).dump(), suite_positivity_vk(c, quiet()).dump());
}

TEST(Suites, NumericPassesAndFaultFails) {
  Report ok = suite_numeric(z2_config(), quiet());
  EXPECT_TRUE(ok.pass()) << ok.dump();
  Report bad = suite_numeric(z2_config(), quiet(true));
  EXPECT_FALSE(bad.pass());
  EXPECT_THROW(run_suite("nope", z2_config()), ConfigError);
}
