#include "dunkl/pairing.hpp"

#include <cmath>

#include "dunkl/numerics.hpp"

namespace dunkl {

Scalar pairing(const DunklOperators& ops, const Polynomial& p, const Polynomial& q) {
  if (p.dim() != ops.dim() || q.dim() != ops.dim()) throw DimensionMismatch("pairing: dimensions differ");
  const Monomial origin(ops.dim());
  Scalar sum = Scalar::zero(ops.mode());
  for (const auto& [nu, c] : p.terms()) {
    // Only the part of q of degree |nu| survives at 0.
    Polynomial r = q.homogeneous_part(nu.degree());
    for (std::size_t i = 0; i < ops.dim() && !r.is_zero(); ++i)
      for (unsigned e = 0; e < nu[i]; ++e) r = ops.dunkl(i).apply(r);
    sum += c * r.coefficient(origin);
  }
  return sum;
}

Scalar pairing_classical(const Polynomial& p, const Polynomial& q) {
  if (p.dim() != q.dim()) throw DimensionMismatch("pairing: dimensions differ");
  if (p.mode() != q.mode()) throw ModeMismatch();
  Scalar sum = Scalar::zero(p.mode());
  for (const auto& [nu, c] : p.terms()) {
    Scalar other = q.coefficient(nu);
    if (other.is_zero()) continue;
    Scalar fact = Scalar::one(p.mode());
    for (std::size_t i = 0; i < nu.dim(); ++i) fact *= factorial(nu[i], p.mode());
    sum += c * other * fact;
  }
  return sum;
}

Scalar pairing_identity_residual(const DunklOperators& ops, const IntertwinerTable& table, const Polynomial& p,
                                 const Polynomial& q) {
  return pairing(ops, vk_apply(table, p), q) - pairing_classical(p, q);
}

PairingPositivity pairing_positivity_check(const DunklOperators& ops, const Polynomial& p) {
  PairingPositivity out;
  out.value = pairing(ops, p, p);
  out.pass = out.value.is_exact() ? out.value.sign() >= 0 : out.value.to_double() >= -1e-12;
  return out;
}

WeightData::WeightData(const RootSystem& roots, const MultiplicityFunction& k) {
  for (std::size_t r = 0; r < roots.size(); ++r) {
    std::vector<double> v;
    for (const auto& c : roots.root(r)) v.push_back(c.to_double());
    roots_.push_back(std::move(v));
    exponents_.push_back(2 * k(r).to_double());
  }
}

double WeightData::operator()(std::span<const double> x) const {
  double w = 1;
  for (std::size_t r = 0; r < roots_.size(); ++r) {
    if (exponents_[r] == 0) continue;
    double ax = 0;
    for (std::size_t i = 0; i < x.size(); ++i) ax += roots_[r][i] * x[i];
    w *= std::pow(std::abs(ax), exponents_[r]);
  }
  return w;
}

namespace {

struct Integrals {
  double pairing = 0;
  double mass = 0;
};

Integrals tensor_integrals(const WeightData& weight, const Polynomial& f, const Polynomial& g,
                           const numerics::QuadratureRule& rule) {
  const std::size_t n = weight.dim();
  const std::size_t m = rule.nodes.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= m;
  Integrals out;
  std::vector<double> x(n);
  std::vector<std::size_t> idx(n, 0);
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t rest = flat;
    double w = 1;
    double r2 = 0;
    for (std::size_t i = 0; i < n; ++i) {
      idx[i] = rest % m;
      rest /= m;
      x[i] = rule.nodes[idx[i]];
      w *= rule.weights[idx[i]];
      r2 += x[i] * x[i];
    }
    double density = w * std::exp(-r2 / 2) * weight(x);
    out.mass += density;
    out.pairing += density * f.evaluate_double(x) * g.evaluate_double(x);
  }
  return out;
}

}  // namespace

GaussianPairing gaussian_pairing_quadrature(const DunklOperators& ops, const Polynomial& p, const Polynomial& q,
                                            const QuadSpec& spec) {
  if (ops.dim() > 3) throw Error("gaussian_pairing_quadrature supports N <= 3");
  if (spec.points_per_panel == 0 || spec.nodes_per_axis < 2 * spec.points_per_panel)
    throw Error("quad_spec: nodes_per_axis must be at least 2 * points_per_panel");
  const MultiplicityFunction& k = ops.params().k;
  if (!k.nonnegative()) throw Error("gaussian_pairing_quadrature needs k >= 0");
  WeightData weight(ops.params().roots, k);
  Scalar minus_half = Scalar::integer(-1, ops.mode()) / Scalar::integer(2, ops.mode());
  Polynomial f = exp_apply(ops.laplacian_squares(), minus_half, p);
  Polynomial g = exp_apply(ops.laplacian_squares(), minus_half, q);

  const std::size_t panels = spec.nodes_per_axis / (2 * spec.points_per_panel);
  auto run = [&](std::size_t panel_count) {
    auto rule = numerics::composite_symmetric(spec.radius_cutoff, panel_count, spec.points_per_panel);
    Integrals in = tensor_integrals(weight, f, g, rule);
    return std::pair{in.pairing / in.mass, 1 / in.mass};
  };
  double coarse = run(panels).first;
  auto [fine, c_fine] = run(2 * panels);
  GaussianPairing out;
  out.value = fine;
  out.c_gauss = c_fine;
  out.error_estimate = std::abs(fine - coarse);
  out.converged = out.error_estimate <= spec.tolerance * std::max(1.0, std::abs(fine));
  return out;
}

}  // namespace dunkl
