#include <cmath>

#include "common.hpp"
#include "dunkl/harness/suites.hpp"
#include "dunkl/kernel.hpp"

namespace dunkl::harness {

using detail::make_check;
using nlohmann::json;

namespace {

const std::vector<Scalar>& k_values() {
  static const std::vector<Scalar> v{Scalar::rational(1, 2), Scalar(1), Scalar::rational(5, 2)};
  return v;
}

DunklParams z2n(std::vector<Scalar> k, unsigned n_max) {
  std::size_t n = k.size();
  return DunklParams::make(builtin_preset("Z2", n, 0, Mode::exact), std::move(k), n_max);
}

/// Largest deviation against a tolerance; margin = tol - deviation.
struct Deviation {
  double worst = 0;
  json witness;
  void record(double dev, const json& where) {
    if (!(dev <= worst)) {
      worst = dev;
      witness = where;
    }
  }
  void finish(Check& c, double tol) const {
    c.inputs["tolerance"] = tol;
    c.margin = tol - worst;
    c.pass = worst <= tol;
    c.detail = {{"max_deviation", worst}, {"at", witness}};
  }
};

Polynomial x_power(unsigned n) { return Polynomial::monomial(Monomial{n}, Scalar(1)); }

Scalar q(long a, long b) { return Scalar::rational(a, b); }

}  // namespace

Report suite_numeric(const Config& config, const SuiteOptions& options) {
  detail::Stopwatch sw;
  Report r;
  r.suite = "numeric";
  const unsigned order = options.order.value_or(30);
  if (order < 1) throw ConfigError("kernel order must be positive");

  // Rank-one builder against the beta-density quadrature.
  {
    Check c = make_check("beta_moments_vs_builder", provenance::oracle);
    Deviation d;
    for (const Scalar& k : k_values()) {
      IntertwinerTable t = build_vk(z2n({k}, 6));
      for (unsigned n = 0; n <= 6; ++n) {
        double quad = beta_moment_quadrature(k.to_double(), n);
        double built = t.block(n)(0, 0).to_double();
        double closed = beta_moment_exact(k, n).to_double();
        d.record(std::max(std::abs(quad - built), std::abs(quad - closed)), {{"k", k.to_string()}, {"n", n}});
      }
    }
    c.inputs["k"] = detail::scalars_json(k_values());
    d.finish(c, 1e-10);
    r.add(std::move(c));
  }
  // Tensor form on Z2^N against the generic builder, exactly.
  {
    Check c = make_check("tensor_form_vs_builder", provenance::closed_form);
    std::size_t evaluated = 0;
    bool ok = true;
    const auto& kv = k_values();
    std::vector<std::vector<Scalar>> ks{{kv[0], kv[1]}, {kv[2], kv[0]}, {kv[0], kv[1], kv[2]}, {kv[1], kv[1], kv[0]}};
    for (const auto& k : ks) {
      DunklParams p = z2n(k, 6);
      IntertwinerTable t = build_vk(p);
      for (const auto& nu : basis_up_to(k.size(), 6)) {
        ++evaluated;
        if (t.image(nu) != Polynomial::monomial(nu, vk_z2n_tensor(p, nu)) && ok) {
          ok = false;
          c.detail = {{"k", detail::scalars_json(k)}, {"monomial", nu.to_string()}};
        }
      }
    }
    c.inputs["evaluated"] = evaluated;
    c.pass = ok;
    c.residual = ok ? "0" : "nonzero";
    r.add(std::move(c));
  }
  // Lambda_s: conjugation definition against its Gaussian-integral form.
  {
    Check c = make_check("lambda_s_closed_form", provenance::closed_form);
    Deviation d;
    for (unsigned e : {2u, 3u, 4u})
      for (const Scalar& s : {q(1, 2), Scalar(1)}) {
        Polynomial exact = lambda_s_apply(s, x_power(e));
        for (int x : {-1, 0, 1}) {
          double closed = lambda_s_closed_form(s.to_double(), x_power(e), x);
          double direct = exact.evaluate(std::vector<Scalar>{Scalar(x)}).to_double();
          d.record(std::abs(closed - direct), {{"p", "x^" + std::to_string(e)}, {"s", s.to_string()}, {"x", x}});
        }
      }
    d.finish(c, 1e-8);
    r.add(std::move(c));
  }
  // Exact pairing against the Gaussian integral.
  {
    Check c = make_check("pairing_vs_gaussian_integral", provenance::closed_form);
    c.inputs["quad_spec"] = {{"nodes_per_axis", config.quad.nodes_per_axis},
                             {"radius_cutoff", config.quad.radius_cutoff},
                             {"tolerance", config.quad.tolerance}};
    Deviation d;
    bool converged = true;
    auto run = [&](const DunklOperators& ops, const Polynomial& p, const Polynomial& qq) {
      double exact = pairing(ops, p, qq).to_double();
      GaussianPairing g = gaussian_pairing_quadrature(ops, p, qq, config.quad);
      converged = converged && g.converged;
      d.record(std::abs(g.value - exact) / std::max(1.0, std::abs(exact)),
               {{"k", detail::scalars_json(ops.params().k.orbit_values())},
                {"p", p.to_string()},
                {"q", qq.to_string()}});
    };
    for (const Scalar& k : k_values()) {
      DunklOperators one(z2n({k}, 4));
      for (unsigned a = 0; a <= 4; ++a)
        for (unsigned b = a; b <= 4; ++b) run(one, x_power(a), x_power(b));
      DunklOperators two(z2n({k, k == Scalar(1) ? q(1, 2) : Scalar(1)}, 4));
      for (const auto& [p, qq] : std::vector<std::pair<const char*, const char*>>{
               {"x1^2", "x1^2"}, {"x1*x2", "x1*x2"}, {"x1^2*x2^2", "x1^2*x2^2"}, {"x1^4", "x1^2*x2^2"},
               {"x1^2 + x2^2", "x1^2 - 3*x2^2 + 1"}, {"x1^3*x2", "x1*x2 + x1^3*x2"}})
        run(two, Polynomial::parse(p, 2), Polynomial::parse(qq, 2));
    }
    d.finish(c, 1e-8);
    c.pass = c.pass && converged;
    c.detail["converged"] = converged;
    r.add(std::move(c));
  }

  // Kernel checks on Z2 with k = 1.
  IntertwinerTable z2table = build_vk(z2n({Scalar(1)}, std::max(order, 2u)));
  if (options.inject_fault) z2table = detail::corrupt_table(z2table, z2table.block(2)(0, 0) + q(1, 7));
  KernelTruncation z2k(z2table, order);
  {
    Check c = make_check("kernel_vs_confluent_series", options.inject_fault ? provenance::fault : provenance::oracle,
                         {{"k", "1"}, {"order", order}});
    Deviation d;
    double tail = 0;
    for (int xn : {-2, -1, 1, 2})
      for (int yn = -8; yn <= 8; ++yn) {
        Scalar x(xn);
        Scalar y = q(yn, 4);
        if (std::abs((x * y).to_double()) > 2) continue;
        KernelValue v = kernel_eval(z2k, {x}, ComplexVector::real({y}));
        tail = std::max(tail, v.tail_bound);
        std::complex<double> closed = rank_one_kernel_closed(1.0, (x * y).to_double());
        d.record(std::abs(v.value - closed), {{"x", x.to_string()}, {"y", y.to_string()}});
      }
    d.finish(c, 1e-10);
    c.detail["max_tail"] = tail;
    r.add(std::move(c));
  }
  {
    Check c = make_check("kernel_bounds", provenance::bound, {{"k", "1"}, {"order", order}, {"grid", "9x9"}});
    double worst = 1e300;
    double worst_imag = 0;
    json at;
    bool ok = true;
    try {
      for (int a = -4; a <= 4; ++a)
        for (int b = -4; b <= 4; ++b) {
          Vector x{q(a, 2)};
          Scalar y = q(b, 2);
          for (const ComplexVector& z : {ComplexVector::imaginary({y}), ComplexVector::real({y})})
            for (const Monomial& nu : {Monomial{0}, Monomial{1}}) {
              BoundVerdict v = kernel_bound_check(z2k, x, z, nu);
              if (v.margin < worst) {
                worst = v.margin;
                at = {{"x", x[0].to_string()}, {"z", z.im[0].is_zero() ? y.to_string() : y.to_string() + "i"},
                      {"nu", nu.to_string()}};
              }
              ok = ok && v.pass;
            }
          worst_imag = std::max(worst_imag, std::abs(z2k.evaluate(x, ComplexVector::imaginary({y})).to_complex()));
        }
    } catch (const TailTooLarge& e) {
      ok = false;
      at = {{"error", e.what()}};
    }
    ok = ok && worst_imag <= 1 + 1e-10;
    c.pass = ok;
    c.margin = worst;
    c.detail = {{"min_margin_at", at}, {"max_abs_K_x_iy", worst_imag}};
    r.add(std::move(c));
  }
  {
    Check c = make_check("gram_positive_semidefinite", provenance::theorem);
    json cases = json::array();
    bool ok = true;
    double margin = 1e300;
    auto add_case = [&](const std::string& label, const KernelTruncation& tr, const std::vector<Vector>& pts,
                        const Vector& y, bool bessel) {
      try {
        GramResult g = gram_psd_check(tr, pts, y, 1e-8, bessel);
        ok = ok && g.pass;
        margin = std::min(margin, g.lambda_min - g.threshold);
        cases.push_back({{"case", label}, {"points", pts.size()}, {"lambda_min", g.lambda_min}, {"tail", g.tail}});
      } catch (const TailTooLarge& e) {
        ok = false;
        cases.push_back({{"case", label}, {"error", e.what()}});
      }
    };
    std::vector<Vector> five, eight;
    for (int i = -2; i <= 2; ++i) five.push_back({q(i, 2)});
    for (int i = 0; i < 8; ++i) eight.push_back({q(2 * i - 7, 8)});
    add_case("Z2 k=1, y=1", z2k, five, {Scalar(1)}, false);
    add_case("Z2 k=1, y=2", z2k, eight, {Scalar(2)}, false);
    add_case("Z2 k=1, Bessel, y=1", z2k, eight, {Scalar(1)}, true);
    KernelTruncation b2(build_vk(DunklParams::make(builtin_preset("B", 2, 0, Mode::exact), {Scalar(1), q(1, 2)}, 20)));
    if (options.inject_fault) b2 = KernelTruncation(detail::corrupt_table(b2.table(), Scalar(-3)));
    std::vector<Vector> pts2{{Scalar(0), Scalar(0)}, {q(1, 2), Scalar(0)}, {Scalar(0), q(1, 2)}, {q(-1, 2), q(1, 4)},
                             {q(1, 4), q(-1, 2)}, {q(1, 2), q(1, 2)},  {q(-1, 4), q(-1, 4)}, {q(3, 4), q(-1, 4)}};
    add_case("B2 k=(1,1/2), y=(1,1/2)", b2, pts2, {Scalar(1), q(1, 2)}, false);
    add_case("B2 k=(1,1/2), Bessel, y=(1,1)", b2, pts2, {Scalar(1), Scalar(1)}, true);
    c.pass = ok;
    c.margin = margin;
    c.detail = {{"cases", cases}};
    r.add(std::move(c));
  }

  // Explicit measures.
  {
    Check c = make_check("measure_moments", provenance::oracle);
    Deviation d;
    for (const Scalar& k : k_values()) {
      IntertwinerTable t = build_vk(z2n({k}, 6));
      for (const Scalar& x : {Scalar(1), q(-3, 2), q(1, 3)})
        for (unsigned n = 0; n <= 6; ++n) {
          double m = t.image(Monomial{n}).evaluate(std::vector<Scalar>{x}).to_double();
          d.record(std::abs(measure_moments(Measure1D{x, k}, n) - m),
                   {{"k", k.to_string()}, {"x", x.to_string()}, {"n", n}});
        }
    }
    std::vector<Scalar> k2{Scalar(1), q(5, 2)};
    IntertwinerTable t2 = build_vk(z2n(k2, 6));
    for (const Vector& x : std::vector<Vector>{{q(1, 2), Scalar(-2)}, {Scalar(1), Scalar(1)}}) {
      ProductMeasure mu = ProductMeasure::at(k2, x);
      for (const auto& nu : basis_up_to(2, 6)) {
        double m = t2.image(nu).evaluate(x).to_double();
        d.record(std::abs(measure_moments(mu, nu) - m), {{"k", detail::scalars_json(k2)}, {"x", to_string(x)},
                                                         {"nu", nu.to_string()}});
      }
    }
    d.finish(c, 1e-10);
    r.add(std::move(c));
  }
  {
    Check c = make_check("measure_transforms", provenance::identity);
    bool ok = true;
    double worst = 0;
    IntertwinerTable t1 = build_vk(z2n({Scalar(1)}, 6));
    Matrix flip(1, 1, Mode::exact);
    flip(0, 0) = Scalar(-1);
    for (const Scalar& r0 : {Scalar(1), Scalar(2), q(1, 3)})
      for (const Matrix& g : {Matrix::identity(1, Mode::exact), flip}) {
        TransformVerdict v = measure_transform_check(t1, {Scalar(1)}, r0, g);
        ok = ok && v.pass;
        worst = std::max(worst, v.max_deviation);
      }
    IntertwinerTable t2 = build_vk(z2n({q(1, 2), q(5, 2)}, 6));
    for (const auto& g : t2.params().group.elements()) {
      TransformVerdict v = measure_transform_check(t2, {q(1, 2), Scalar(-1)}, q(3, 2), g);
      ok = ok && v.pass;
      worst = std::max(worst, v.max_deviation);
    }
    c.pass = ok;
    c.margin = 1e-10 - worst;
    c.detail = {{"max_deviation", worst}};
    r.add(std::move(c));
  }
  {
    Check c = make_check("support_in_orbit_hull", provenance::theorem);
    bool ok = true;
    json cases = json::array();
    DunklParams one = z2n({Scalar(1)}, 2);
    DunklParams two = z2n({Scalar(1), q(1, 2)}, 2);
    for (const auto& [params, x] : std::vector<std::pair<DunklParams*, Vector>>{
             {&one, {Scalar(1)}}, {&one, {q(-3, 2)}}, {&two, {Scalar(1), Scalar(2)}}, {&two, {Scalar(0), Scalar(0)}}}) {
      HullVerdict h = support_hull_check(*params, x);
      ok = ok && h.pass;
      cases.push_back({{"x", to_string(x)}, {"orbit_size", h.orbit.size()}, {"pass", h.pass}});
    }
    c.pass = ok;
    c.detail = {{"cases", cases}};
    r.add(std::move(c));
  }

  // Euler and Trotter product formulas for A = D^2, B = 2 k delta.
  for (const char* which : {"euler_rate", "trotter_rate"}) {
    Check c = make_check(which, provenance::rate, {{"ns", {8, 16, 32}}, {"k", detail::scalars_json(k_values())}});
    bool ok = true;
    double worst_ratio = 0;
    json rows = json::array();
    for (const Scalar& k : k_values()) {
      PolyOperator a = second_derivative_1d();
      PolyOperator b = (Scalar(2) * k) * delta_1d();
      PolyOperator sum = a + b;
      for (unsigned e : {4u, 5u, 6u}) {
        Polynomial p = x_power(e);
        Polynomial exact = exp_apply(sum, Scalar(1), p);
        auto error = [&](unsigned n) {
          Polynomial approx = std::string(which) == "euler_rate" ? euler_approx(sum, n, p) : trotter_approx(a, b, n, p);
          return (approx - exact).max_abs_coefficient();
        };
        double prev = error(8);
        for (unsigned n : {8u, 16u, 32u}) {
          double next = error(2 * n);
          double ratio = prev == 0 ? 0 : next / prev;
          ok = ok && ratio <= 0.75;
          worst_ratio = std::max(worst_ratio, ratio);
          rows.push_back({{"k", k.to_string()}, {"p", "x^" + std::to_string(e)}, {"n", n}, {"ratio", ratio}});
          prev = next;
        }
      }
    }
    c.pass = ok;
    c.margin = 0.75 - worst_ratio;
    c.detail = {{"ratios", rows}};
    r.add(std::move(c));
  }
  return detail::finish(std::move(r), sw, options.timing);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"identities", "positivity_vk", "semigroup_positivity", "numeric"};
  return names;
}

Report run_suite(const std::string& name, const Config& config, const SuiteOptions& options) {
  if (name == "identities") return suite_identities(config, options);
  if (name == "positivity_vk" || name == "positivity") return suite_positivity_vk(config, options);
  if (name == "semigroup_positivity" || name == "semigroup") return suite_semigroup_positivity(config, options);
  if (name == "numeric") return suite_numeric(config, options);
  throw ConfigError("unknown suite '" + name + "'");
}

}  // namespace dunkl::harness
