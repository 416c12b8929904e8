#include <set>

#include "common.hpp"
#include "dunkl/harness/suites.hpp"
#include "dunkl/kernel.hpp"

namespace dunkl::harness {

using detail::make_check;
using detail::ResidualTally;
using nlohmann::json;

namespace {

json base_inputs(const Config& config, const DunklParams& params) {
  return {{"group", params.roots.label()},
          {"k", detail::scalars_json(params.k.orbit_values())},
          {"n_max", config.n_max}};
}

void require_exact(const Config& config, const char* suite) {
  if (config.mode != Mode::exact) throw ConfigError(std::string(suite) + " suite runs in exact mode only");
}

void require_nonnegative(const DunklParams& params, const char* suite) {
  if (!params.k.nonnegative()) throw ConfigError(std::string(suite) + " suite needs k >= 0");
}

std::string mono_text(const Monomial& m) { return m.to_string(); }

std::vector<Scalar> distinct_values(const std::vector<Scalar>& v) {
  std::vector<Scalar> out;
  for (const auto& s : v)
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  return out;
}

Polynomial x_power(unsigned n) { return Polynomial::monomial(Monomial{n}, Scalar(1)); }

}  // namespace

Report suite_identities(const Config& config, const SuiteOptions& options) {
  detail::Stopwatch sw;
  require_exact(config, "identities");
  DunklParams params = config.params();
  DunklOperators ops(params);
  const std::size_t dim = ops.dim();
  const unsigned n = config.n_max;
  const auto basis = basis_up_to(dim, n);
  const json inputs = base_inputs(config, params);
  Report r;
  r.suite = "identities";

  if (dim > 1) {
    Check c = make_check("commutativity", provenance::identity, inputs);
    ResidualTally t;
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = i + 1; j < dim; ++j)
        for (const auto& m : basis) {
          Polynomial p = Polynomial::monomial(m, Scalar(1));
          t.record("T" + std::to_string(i + 1) + " T" + std::to_string(j + 1) + " " + mono_text(m),
                   ops.dunkl(i).apply(ops.dunkl(j).apply(p)) - ops.dunkl(j).apply(ops.dunkl(i).apply(p)));
        }
    t.finish(c);
    r.add(std::move(c));
  }
  {
    Check c = make_check("laplacian_two_forms", provenance::identity, inputs);
    ResidualTally t;
    for (const auto& m : basis) {
      Polynomial p = Polynomial::monomial(m, Scalar(1));
      t.record(mono_text(m), ops.laplacian_squares().apply(p) - ops.laplacian_reflection().apply(p));
    }
    t.finish(c);
    r.add(std::move(c));
  }
  {
    Check c = make_check("rank_one_square", provenance::identity, inputs);
    ResidualTally t;
    for (const Scalar& k : distinct_values(params.k.orbit_values())) {
      DunklOperators one(DunklParams::make(builtin_preset("Z2", 1, 0, Mode::exact), {k}, n));
      PolyOperator rhs = second_derivative_1d() + (Scalar(2) * k) * delta_1d();
      for (unsigned e = 0; e <= n; ++e) {
        Polynomial p = x_power(e);
        t.record("k=" + k.to_string() + " x^" + std::to_string(e),
                 one.dunkl(0).apply(one.dunkl(0).apply(p)) - rhs.apply(p));
      }
    }
    t.finish(c);
    r.add(std::move(c));
  }
  const std::vector<Scalar> s_values{detail::half(), Scalar(1), Scalar(2)};
  {
    Check c = make_check("lambda_s_equations", provenance::identity, inputs);
    ResidualTally t;
    for (const Scalar& s : s_values)
      for (unsigned e = 0; e <= n; ++e) {
        Polynomial p = x_power(e);
        Polynomial q = lambda_s_apply(s, p);
        std::string label = "s=" + s.to_string() + " x^" + std::to_string(e);
        t.record(label, e % 2 == 0 ? lambda_ode_residual(s, p, q) : lambda_odd_residual(s, p, q));
      }
    t.finish(c);
    r.add(std::move(c));
  }
  {
    Check c = make_check("polynomial_ode_solution", provenance::identity, inputs);
    ResidualTally t;
    for (const Scalar& cc : s_values)
      for (unsigned e = 1; e <= n; e += 2) {
        Polynomial p = x_power(e);
        Polynomial y = ode_poly_solve(cc, p);
        Polynomial x = x_power(1);
        t.record("c=" + cc.to_string() + " x^" + std::to_string(e), cc * y.derivative(0) - x * y - p);
      }
    for (const Scalar& cc : s_values)
      for (unsigned e = 0; e <= n; ++e)
        t.record("conjugation c=" + cc.to_string() + " x^" + std::to_string(e),
                 exp_conjugate_identity_check(cc, x_power(e)));
    t.finish(c);
    r.add(std::move(c));
  }

  IntertwinerTable table = build_vk(ops, n);
  if (options.inject_fault) table = detail::corrupt_table(table, table.block(2)(0, 0) + Scalar(1));
  {
    Check c = make_check("intertwining_relation",
                         options.inject_fault ? provenance::fault : provenance::identity, inputs);
    ResidualTally t;
    t.record("V_k 1", table.image(Monomial(dim)) - Polynomial::constant(dim, Scalar(1)));
    for (const auto& m : basis)
      for (std::size_t i = 0; i < dim; ++i)
        t.record("T" + std::to_string(i + 1) + " V_k " + mono_text(m), intertwining_residual(ops, table, m, i));
    t.finish(c);
    r.add(std::move(c));
  }
  {
    Check c = make_check("pairing_identity", options.inject_fault ? provenance::fault : provenance::identity, inputs);
    ResidualTally t;
    for (const auto& a : basis)
      for (const auto& b : basis) {
        Polynomial p = Polynomial::monomial(a, Scalar(1));
        Polynomial q = Polynomial::monomial(b, Scalar(1));
        t.record("[V_k " + mono_text(a) + ", " + mono_text(b) + "]", pairing_identity_residual(ops, table, p, q));
      }
    t.finish(c);
    r.add(std::move(c));
  }
  {
    Check c = make_check("kernel_recursion", options.inject_fault ? provenance::fault : provenance::identity, inputs);
    ResidualTally t;
    KernelTruncation tr(table, n);
    std::vector<Vector> ys(2, Vector(dim));
    for (std::size_t i = 0; i < dim; ++i) {
      ys[0][i] = Scalar::rational(1, static_cast<long>(i) + 1);
      ys[1][i] = Scalar::rational(static_cast<long>(i % 2 == 0 ? -3 : 2), 2);
    }
    for (const auto& y : ys)
      for (std::size_t i = 0; i < dim; ++i)
        for (unsigned d = 0; d + 1 <= n; ++d)
          t.record("xi=e" + std::to_string(i + 1) + " y=" + to_string(y) + " n=" + std::to_string(d),
                   kernel_recursion_residual(ops, tr, unit_vector(dim, i, Mode::exact), y, d));
    t.finish(c);
    r.add(std::move(c));
  }
  return detail::finish(std::move(r), sw, options.timing);
}

namespace {

struct FamilyScan {
  std::vector<FamilyMember> family;
  DyadicGrid grid;
};

FamilyScan family_and_grid(const Config& config, std::size_t dim) {
  if (config.family.max_degree > config.n_max)
    throw ConfigError("family.max_degree exceeds n_max");
  try {
    return {nonnegative_family(dim, config.family, config.seed), ball_grid(dim, config.grid_shift)};
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
}

json scan_detail(const GridScan& s, const DyadicGrid& grid) {
  return {{"point", to_string(grid.point(s.argmin))}, {"value", s.min_value.get_str()}};
}

void fill_scan(Check& c, const GridScan& s, const DyadicGrid& grid) {
  c.pass = s.nonnegative;
  c.margin = s.min_value.get_d();
  c.residual = s.min_value.get_str();
  c.inputs["grid_points"] = grid.size();
  if (!s.nonnegative) c.detail = scan_detail(s, grid);
}

/// Minimum over the whole family of `op` applied to each member.
template <typename Apply>
Check scan_family(const std::string& name, const char* prov, json inputs, const FamilyScan& fs, Apply apply) {
  Check c = make_check(name, prov, std::move(inputs));
  GridScan worst;
  std::size_t worst_member = 0;
  bool first = true;
  for (std::size_t i = 0; i < fs.family.size(); ++i) {
    GridScan s = scan_grid(apply(fs.family[i].p), fs.grid);
    if (first || s.min_value < worst.min_value) {
      worst = s;
      worst_member = i;
      first = false;
    }
  }
  fill_scan(c, worst, fs.grid);
  c.inputs["family_size"] = fs.family.size();
  if (!c.pass) c.detail["polynomial"] = fs.family[worst_member].p.to_string();
  return c;
}

}  // namespace

Report suite_positivity_vk(const Config& config, const SuiteOptions& options) {
  detail::Stopwatch sw;
  require_exact(config, "positivity_vk");
  DunklParams params = config.params();
  require_nonnegative(params, "positivity_vk");
  DunklOperators ops(params);
  FamilyScan fs = family_and_grid(config, ops.dim());
  IntertwinerTable table = build_vk(ops, config.n_max);
  if (options.inject_fault) table = detail::corrupt_table(table, Scalar(-1));
  const json inputs = base_inputs(config, params);
  Report r;
  r.suite = "positivity_vk";

  r.add(scan_family("family_nonnegative", provenance::construction, inputs, fs,
                    [](const Polynomial& p) { return p; }));
  for (std::size_t i = 0; i < fs.family.size(); ++i) {
    json in = inputs;
    in["p"] = fs.family[i].p.to_string();
    in["construction"] = fs.family[i].construction;
    Check c = make_check("vk_nonnegative/" + std::to_string(i),
                         options.inject_fault ? provenance::fault : provenance::theorem, in);
    fill_scan(c, scan_grid(vk_apply(table, fs.family[i].p), fs.grid), fs.grid);
    r.add(std::move(c));
  }
  return detail::finish(std::move(r), sw, options.timing);
}

Report suite_semigroup_positivity(const Config& config, const SuiteOptions& options) {
  detail::Stopwatch sw;
  require_exact(config, "semigroup_positivity");
  DunklParams params = config.params();
  require_nonnegative(params, "semigroup_positivity");
  DunklOperators ops(params);
  FamilyScan fs = family_and_grid(config, ops.dim());
  const json inputs = base_inputs(config, params);
  Report r;
  r.suite = "semigroup_positivity";

  const std::vector<Scalar> times{Scalar(0), detail::half(), Scalar(1), Scalar(2)};
  const PolyOperator& lap = ops.classical_laplacian();
  const PolyOperator& lk = ops.reflection_part();
  for (const Scalar& s : times)
    for (const Scalar& t : times) {
      PolyOperator op = exp_operator(lap, -s) * exp_operator(lk, t) * exp_operator(lap, s);
      json in = inputs;
      in["s"] = s.to_string();
      in["t"] = t.to_string();
      r.add(scan_family("conjugated_reflection_semigroup", provenance::theorem, in, fs,
                        [&](const Polynomial& p) { return op.apply(p); }));
    }

  PolyOperator heat = exp_operator(lap, -detail::half()) * exp_operator(ops.laplacian_squares(), detail::half());
  if (options.inject_fault) {
    Monomial x1sq = Monomial(ops.dim()).times(0, 2);
    heat = heat.with_image(x1sq, -heat.image(x1sq));
  }
  r.add(scan_family("heat_intertwiner", options.inject_fault ? provenance::fault : provenance::theorem, inputs, fs,
                    [&](const Polynomial& p) { return heat.apply(p); }));

  // Minimum principle for Lambda_s at zeros of nonnegative polynomials in one variable.
  {
    Polynomial x = x_power(1);
    Polynomial one = Polynomial::constant(1, Scalar(1));
    struct Touching {
      Polynomial p;
      std::vector<Scalar> zeros;
    };
    std::vector<Touching> cases{{x.pow(2) * (x - one).pow(2), {Scalar(0), Scalar(1)}}};
    const std::vector<Scalar> roots{Scalar(-2), Scalar(-1), detail::half() * Scalar(-1), Scalar(0), detail::half(),
                                    Scalar(1), Scalar::rational(3, 2)};
    for (std::size_t i = 0; i < roots.size(); ++i) {
      const Scalar& a = roots[i];
      const Scalar& b = roots[(i + 3) % roots.size()];
      Polynomial pa = x - Polynomial::constant(1, a);
      Polynomial pb = x - Polynomial::constant(1, b);
      cases.push_back({pa.pow(2), {a}});
      cases.push_back({pa.pow(2) * (x.pow(2) + one), {a}});
      cases.push_back({pa.pow(2) * pb.pow(2), {a, b}});
      cases.push_back({pa.pow(2) * pb.pow(2) * (x - Polynomial::constant(1, a + b)).pow(2), {a, b, a + b}});
    }
    for (const Scalar& s : std::vector<Scalar>{detail::half(), Scalar(1), Scalar(2)}) {
      PolyOperator lam = lambda_s_operator(s);
      Check c = make_check("lambda_minimum_principle", provenance::theorem, {{"s", s.to_string()}});
      std::size_t evaluated = 0;
      Scalar worst;
      bool first = true;
      for (const auto& tc : cases)
        for (const Scalar& z : tc.zeros) {
          MinimumPrincipleVerdict v = minimum_principle_check(lam, tc.p, {z});
          ++evaluated;
          if (first || v.value < worst) {
            worst = v.value;
            first = false;
            if (!v.pass) c.detail = {{"polynomial", tc.p.to_string()}, {"zero", z.to_string()}};
          }
        }
      c.inputs["evaluated"] = evaluated;
      c.pass = worst.sign() >= 0;
      c.margin = worst.to_double();
      c.residual = worst.to_string();
      r.add(std::move(c));
    }
  }
  return detail::finish(std::move(r), sw, options.timing);
}

}  // namespace dunkl::harness
