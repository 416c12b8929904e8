#include "dunkl/operators.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "dunkl/numerics.hpp"

namespace dunkl {

struct PolyOperator::Impl {
  std::size_t dim = 0;
  Mode mode = Mode::exact;
  int shift = 0;
  std::string name;
  MonomialImage image;
  std::mutex mutex;
  std::map<Monomial, Polynomial> cache;
};

PolyOperator::PolyOperator(std::size_t dim, Mode mode, int degree_shift, MonomialImage image, std::string name)
    : impl_(std::make_shared<Impl>()) {
  impl_->dim = dim;
  impl_->mode = mode;
  impl_->shift = degree_shift;
  impl_->image = std::move(image);
  impl_->name = std::move(name);
}

PolyOperator PolyOperator::identity(std::size_t dim, Mode mode) {
  return PolyOperator(
      dim, mode, 0, [mode](const Monomial& m) { return Polynomial::monomial(m, Scalar::one(mode)); }, "I");
}

PolyOperator PolyOperator::zero(std::size_t dim, Mode mode) {
  return PolyOperator(
      dim, mode, -1, [dim, mode](const Monomial&) { return Polynomial(dim, mode); }, "0");
}

namespace {

void checked(const void* impl) {
  if (impl == nullptr) throw Error("operation on an empty PolyOperator");
}

}  // namespace

std::size_t PolyOperator::dim() const {
  checked(impl_.get());
  return impl_->dim;
}

Mode PolyOperator::mode() const {
  checked(impl_.get());
  return impl_->mode;
}

int PolyOperator::degree_shift() const {
  checked(impl_.get());
  return impl_->shift;
}

const std::string& PolyOperator::name() const {
  checked(impl_.get());
  return impl_->name;
}

const Polynomial& PolyOperator::image(const Monomial& m) const {
  checked(impl_.get());
  if (m.dim() != impl_->dim) throw DimensionMismatch("operator and monomial dimensions differ");
  {
    std::lock_guard lock(impl_->mutex);
    auto it = impl_->cache.find(m);
    if (it != impl_->cache.end()) return it->second;
  }
  Polynomial value = impl_->image(m);
  std::lock_guard lock(impl_->mutex);
  return impl_->cache.try_emplace(m, std::move(value)).first->second;
}

Polynomial PolyOperator::apply(const Polynomial& p) const {
  checked(impl_.get());
  if (p.dim() != impl_->dim) throw DimensionMismatch("operator and polynomial dimensions differ");
  if (p.mode() != impl_->mode) throw ModeMismatch();
  Polynomial out(impl_->dim, impl_->mode);
  for (const auto& [m, c] : p.terms()) out += image(m) * c;
  return out;
}

namespace {

void require_compatible(const PolyOperator& a, const PolyOperator& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("operators act on different dimensions");
  if (a.mode() != b.mode()) throw ModeMismatch();
}

}  // namespace

PolyOperator operator+(const PolyOperator& a, const PolyOperator& b) {
  require_compatible(a, b);
  return PolyOperator(
      a.dim(), a.mode(), std::max(a.degree_shift(), b.degree_shift()),
      [a, b](const Monomial& m) { return a.image(m) + b.image(m); }, "(" + a.name() + " + " + b.name() + ")");
}

PolyOperator operator-(const PolyOperator& a, const PolyOperator& b) {
  require_compatible(a, b);
  return PolyOperator(
      a.dim(), a.mode(), std::max(a.degree_shift(), b.degree_shift()),
      [a, b](const Monomial& m) { return a.image(m) - b.image(m); }, "(" + a.name() + " - " + b.name() + ")");
}

PolyOperator operator*(const Scalar& s, const PolyOperator& a) {
  if (s.mode() != a.mode()) throw ModeMismatch();
  return PolyOperator(
      a.dim(), a.mode(), a.degree_shift(), [s, a](const Monomial& m) { return s * a.image(m); },
      s.to_string() + "*" + a.name());
}

PolyOperator operator*(const PolyOperator& a, const PolyOperator& b) {
  require_compatible(a, b);
  return PolyOperator(
      a.dim(), a.mode(), a.degree_shift() + b.degree_shift(),
      [a, b](const Monomial& m) { return a.apply(b.image(m)); }, a.name() + " " + b.name());
}

PolyOperator PolyOperator::with_image(const Monomial& m, Polynomial image) const {
  PolyOperator base = *this;
  int shift = degree_shift();
  if (!image.is_zero()) shift = std::max(shift, image.degree() - static_cast<int>(m.degree()));
  return PolyOperator(
      dim(), mode(), shift,
      [base, m, image = std::move(image)](const Monomial& x) { return x == m ? image : base.image(x); },
      name() + "'");
}

// ------------------------------------------------------------ basic operators

PolyOperator partial_derivative_operator(std::size_t dim, std::size_t i, Mode mode) {
  if (i >= dim) throw DimensionMismatch("partial derivative index out of range");
  return PolyOperator(
      dim, mode, -1, [mode, i](const Monomial& m) { return Polynomial::monomial(m, Scalar::one(mode)).derivative(i); },
      "D" + std::to_string(i + 1));
}

PolyOperator directional_derivative_operator(const Vector& xi) {
  if (xi.empty()) throw DimensionMismatch("empty direction");
  Mode mode = xi.front().mode();
  return PolyOperator(
      xi.size(), mode, -1,
      [xi, mode](const Monomial& m) { return Polynomial::monomial(m, Scalar::one(mode)).directional_derivative(xi); },
      "D_xi");
}

PolyOperator classical_laplacian_operator(std::size_t dim, Mode mode) {
  return PolyOperator(
      dim, mode, -2,
      [dim, mode](const Monomial& m) {
        Polynomial x = Polynomial::monomial(m, Scalar::one(mode));
        Polynomial out(dim, mode);
        for (std::size_t i = 0; i < dim; ++i) out += x.derivative(i).derivative(i);
        return out;
      },
      "Delta");
}

PolyOperator difference_quotient_operator(const Vector& alpha) {
  if (alpha.empty()) throw DimensionMismatch("empty root");
  Mode mode = alpha.front().mode();
  Matrix sigma = reflection_matrix(alpha);
  return PolyOperator(
      alpha.size(), mode, -1,
      [alpha, sigma, mode](const Monomial& m) {
        Polynomial x = Polynomial::monomial(m, Scalar::one(mode));
        return exact_divide_by_linear(x - x.substitute(sigma), alpha);
      },
      "dq");
}

PolyOperator delta_operator(const Vector& alpha) {
  PolyOperator dq = difference_quotient_operator(alpha);
  Mode mode = alpha.front().mode();
  Scalar half_len = norm_squared(alpha) / Scalar::integer(2, mode);
  return PolyOperator(
      alpha.size(), mode, -2,
      [alpha, dq, half_len, mode](const Monomial& m) {
        Polynomial x = Polynomial::monomial(m, Scalar::one(mode));
        Polynomial numerator = x.directional_derivative(alpha) - half_len * dq.image(m);
        return exact_divide_by_linear(numerator, alpha);
      },
      "delta");
}

PolyOperator exp_operator(const PolyOperator& a, const Scalar& t) {
  if (!a.lowers_degree()) throw Error("exp_operator: operator must lower the degree");
  return PolyOperator(
      a.dim(), a.mode(), 0,
      [a, t](const Monomial& m) { return exp_apply(a, t, Polynomial::monomial(m, Scalar::one(a.mode()))); },
      "exp(" + t.to_string() + " " + a.name() + ")");
}

// -------------------------------------------------------------- Dunkl setting

DunklParams DunklParams::make(RootSystem roots, std::vector<Scalar> orbit_values, unsigned n_max,
                              std::size_t closure_bound) {
  ReflectionGroup group = build_group(roots, closure_bound);
  MultiplicityFunction k(roots, std::move(orbit_values));
  return DunklParams{std::move(roots), std::move(group), std::move(k), n_max};
}

DunklOperators::DunklOperators(DunklParams params) : params_(std::move(params)) {
  const std::size_t n = dim();
  const Mode md = mode();
  const RootSystem& rs = params_.roots;
  for (std::size_t r = 0; r < rs.size(); ++r) {
    quotients_.push_back(difference_quotient_operator(rs.root(r)));
    deltas_.push_back(delta_operator(rs.root(r)));
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::pair<Scalar, PolyOperator>> parts;
    for (std::size_t r = 0; r < rs.size(); ++r) {
      Scalar c = params_.k(r) * rs.root(r)[i];
      if (!c.is_zero()) parts.emplace_back(c, quotients_[r]);
    }
    dunkl_.emplace_back(
        n, md, -1,
        [i, md, parts = std::move(parts)](const Monomial& m) {
          Polynomial out = Polynomial::monomial(m, Scalar::one(md)).derivative(i);
          for (const auto& [c, q] : parts) out += q.image(m) * c;
          return out;
        },
        "T" + std::to_string(i + 1));
  }

  classical_laplacian_ = classical_laplacian_operator(n, md);
  {
    std::vector<std::pair<Scalar, PolyOperator>> parts;
    for (std::size_t r = 0; r < rs.size(); ++r) {
      Scalar c = Scalar::integer(2, md) * params_.k(r);
      if (!c.is_zero()) parts.emplace_back(c, deltas_[r]);
    }
    reflection_part_ = PolyOperator(
        n, md, -2,
        [n, md, parts = std::move(parts)](const Monomial& m) {
          Polynomial out(n, md);
          for (const auto& [c, d] : parts) out += d.image(m) * c;
          return out;
        },
        "L_k");
  }
  laplacian_reflection_ = classical_laplacian_ + reflection_part_;
  std::vector<PolyOperator> ts = dunkl_;
  laplacian_squares_ = PolyOperator(
      n, md, -2,
      [n, md, ts](const Monomial& m) {
        Polynomial out(n, md);
        for (const auto& t : ts) out += t.apply(t.image(m));
        return out;
      },
      "Delta_k");
}

PolyOperator DunklOperators::dunkl(const Vector& xi) const {
  if (xi.size() != dim()) throw DimensionMismatch("direction has wrong dimension");
  std::vector<std::pair<Scalar, PolyOperator>> parts;
  for (std::size_t i = 0; i < dim(); ++i)
    if (!xi[i].is_zero()) parts.emplace_back(xi[i], dunkl_[i]);
  const std::size_t n = dim();
  const Mode md = mode();
  return PolyOperator(
      n, md, -1,
      [n, md, parts = std::move(parts)](const Monomial& m) {
        Polynomial out(n, md);
        for (const auto& [c, t] : parts) out += t.image(m) * c;
        return out;
      },
      "T_xi");
}

Polynomial dunkl_apply(const DunklOperators& ops, const Vector& xi, const Polynomial& p) {
  if (xi.size() != ops.dim()) throw DimensionMismatch("direction has wrong dimension");
  Polynomial out(ops.dim(), ops.mode());
  for (std::size_t i = 0; i < xi.size(); ++i)
    if (!xi[i].is_zero()) out += ops.dunkl(i).apply(p) * xi[i];
  return out;
}

Polynomial delta_alpha_apply(const Vector& alpha, const Polynomial& p) {
  if (alpha.size() != p.dim()) throw DimensionMismatch("root and polynomial dimensions differ");
  return delta_operator(alpha).apply(p);
}

Polynomial laplacian_apply(const DunklOperators& ops, const Polynomial& p, LaplacianRoute route) {
  return route == LaplacianRoute::sum_of_squares ? ops.laplacian_squares().apply(p)
                                                 : ops.laplacian_reflection().apply(p);
}

// ----------------------------------------------------------- operator calculus

Matrix operator_matrix(const PolyOperator& a, unsigned n) {
  std::vector<Monomial> basis = basis_up_to(a.dim(), n);
  std::map<Monomial, std::size_t> index;
  for (std::size_t j = 0; j < basis.size(); ++j) index.emplace(basis[j], j);
  Matrix out(basis.size(), basis.size(), a.mode());
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (const auto& [m, c] : a.image(basis[j]).terms()) {
      auto it = index.find(m);
      if (it == index.end()) throw Error("operator_matrix: image leaves Pi_" + std::to_string(n));
      out(it->second, j) = c;
    }
  return out;
}

bool verify_degree_lowering(const PolyOperator& a, unsigned n) {
  for (const Monomial& m : basis_up_to(a.dim(), n))
    if (a.image(m).degree() >= static_cast<int>(m.degree())) return false;
  return true;
}

Polynomial exp_apply(const PolyOperator& a, const Scalar& t, const Polynomial& p) {
  if (!a.lowers_degree()) throw Error("exp_apply: operator must lower the degree");
  Polynomial sum = p;
  Polynomial term = p;
  const int limit = p.degree() + 1;
  for (int j = 1; !term.is_zero(); ++j) {
    if (j > limit + 1) throw Error("exp_apply: series did not terminate");
    term = a.apply(term) * (t / Scalar::integer(j, t.mode()));
    sum += term;
  }
  return sum;
}

namespace {

// sum_j (c A)^j p, finite because A lowers the degree.
Polynomial neumann(const PolyOperator& a, const Scalar& c, const Polynomial& p) {
  if (!a.lowers_degree()) throw Error("operator must lower the degree");
  Polynomial sum = p;
  Polynomial term = p;
  const int limit = p.degree() + 1;
  for (int j = 1; !term.is_zero(); ++j) {
    if (j > limit + 1) throw Error("Neumann series did not terminate");
    term = a.apply(term) * c;
    sum += term;
  }
  return sum;
}

}  // namespace

Polynomial resolvent_apply(const PolyOperator& a, const Scalar& lambda, const Polynomial& p) {
  if (lambda.is_zero()) throw Error("resolvent_apply: lambda must be nonzero");
  return neumann(a, lambda.inverse(), p) * lambda.inverse();
}

Polynomial euler_approx(const PolyOperator& a, unsigned n, const Polynomial& p) {
  if (n == 0) throw Error("euler_approx: n must be positive");
  Scalar c = Scalar::integer(1, a.mode()) / Scalar::integer(n, a.mode());
  Polynomial q = p;
  for (unsigned i = 0; i < n; ++i) q = neumann(a, c, q);
  return q;
}

Polynomial trotter_approx(const PolyOperator& a, const PolyOperator& b, unsigned n, const Polynomial& p) {
  if (n == 0) throw Error("trotter_approx: n must be positive");
  require_compatible(a, b);
  Scalar c = Scalar::integer(1, a.mode()) / Scalar::integer(n, a.mode());
  Polynomial q = p;
  for (unsigned i = 0; i < n; ++i) q = exp_apply(a, c, exp_apply(b, c, q));
  return q;
}

// ------------------------------------------------------ one-variable operators

PolyOperator second_derivative_1d(Mode mode) {
  return PolyOperator(
      1, mode, -2,
      [mode](const Monomial& m) { return Polynomial::monomial(m, Scalar::one(mode)).derivative(0).derivative(0); },
      "D^2");
}

PolyOperator delta_1d(Mode mode) { return delta_operator({Scalar::one(mode)}); }

PolyOperator lambda_s_operator(const Scalar& s) {
  Mode mode = s.mode();
  PolyOperator d2 = second_derivative_1d(mode);
  PolyOperator delta = delta_1d(mode);
  return PolyOperator(
      1, mode, -2,
      [s, d2, delta, mode](const Monomial& m) {
        Polynomial up = exp_apply(d2, s, Polynomial::monomial(m, Scalar::one(mode)));
        return exp_apply(d2, -s, delta.apply(up));
      },
      "Lambda_" + s.to_string());
}

Polynomial lambda_s_apply(const Scalar& s, const Polynomial& p) { return lambda_s_operator(s).apply(p); }

namespace {

Polynomial x_times(const Polynomial& p) { return Polynomial::variable(1, 0, p.mode()) * p; }

bool has_parity(const Polynomial& p, unsigned parity) {
  for (const auto& [m, c] : p.terms())
    if (m[0] % 2 != parity) return false;
  return true;
}

}  // namespace

Polynomial lambda_ode_residual(const Scalar& s, const Polynomial& p, const Polynomial& q) {
  if (p.dim() != 1 || q.dim() != 1) throw DimensionMismatch("lambda_ode_residual is one-dimensional");
  if (!has_parity(p, 0)) throw Error("lambda_ode_residual: p must be even");
  Scalar two_s = Scalar::integer(2, s.mode()) * s;
  return p.derivative(0) - (x_times(q) - q.derivative(0) * two_s);
}

Polynomial lambda_odd_residual(const Scalar& s, const Polynomial& p, const Polynomial& q) {
  if (p.dim() != 1 || q.dim() != 1) throw DimensionMismatch("lambda_odd_residual is one-dimensional");
  if (!has_parity(p, 1)) throw Error("lambda_odd_residual: p must be odd");
  PolyOperator d2 = second_derivative_1d(s.mode());
  Polynomial up = exp_apply(d2, s, p);
  Polynomial over_x = exact_divide_by_linear(up, {Scalar::one(s.mode())});
  return over_x.derivative(0) - exp_apply(d2, s, q);
}

Polynomial ode_poly_solve(const Scalar& c, const Polynomial& p) {
  if (p.dim() != 1) throw DimensionMismatch("ode_poly_solve is one-dimensional");
  if (!has_parity(p, 1)) throw Error("ode_poly_solve: p must be odd");
  if (c.sign() <= 0) throw Error("ode_poly_solve: c must be positive");
  Polynomial y(1, p.mode());
  if (p.is_zero()) return y;
  const int top = p.degree() - 1;
  // Coefficient of x^(j+1) in c y' - x y is c (j+2) y_{j+2} - y_j.
  Scalar above = Scalar::zero(p.mode());
  for (int j = top; j >= 0; j -= 2) {
    Scalar yj = c * Scalar::integer(j + 2, p.mode()) * above - p.coefficient(Monomial{static_cast<unsigned>(j + 1)});
    y.add_term(Monomial{static_cast<unsigned>(j)}, yj);
    above = yj;
  }
  return y;
}

Polynomial exp_conjugate_identity_check(const Scalar& c, const Polynomial& p) {
  if (p.dim() != 1) throw DimensionMismatch("exp_conjugate_identity_check is one-dimensional");
  PolyOperator d2 = second_derivative_1d(c.mode());
  Scalar two_c = Scalar::integer(2, c.mode()) * c;
  return exp_apply(d2, c, x_times(p)) - x_times(exp_apply(d2, c, p)) - exp_apply(d2, c, p.derivative(0)) * two_c;
}

double lambda_s_closed_form(double s, const Polynomial& p, double x, double weight) {
  if (!(s > 0)) throw Error("lambda_s_closed_form: s must be positive");
  if (p.dim() != 1) throw DimensionMismatch("lambda_s_closed_form is one-dimensional");
  auto eval = [&p](double t) { return p.evaluate_double(std::span<const double>(&t, 1)); };
  // Both integrals written over u in [0, inf) with t = x - u and t = u - x.
  auto integrand = [&](double u) {
    double e = std::exp((2 * x * u - u * u) / (4 * s));
    if (e == 0) return 0.0;
    return e * ((2 * x - u) * eval(x - u) - u * eval(u - x));
  };
  double integral = numerics::integrate_half_line(integrand, 1e-14);
  return -eval(x) / (2 * s) - weight / (4 * s * s) * integral;
}

MinimumPrincipleVerdict minimum_principle_check(const PolyOperator& a, const Polynomial& p, const Vector& x0,
                                                double tol) {
  Scalar at = p.evaluate(x0);
  bool zero = at.is_exact() ? at.is_zero() : std::abs(at.to_double()) <= tol;
  if (!zero) throw Error("minimum_principle_check: p(x0) = " + at.to_string() + " is not zero");
  MinimumPrincipleVerdict v;
  v.value = a.apply(p).evaluate(x0);
  v.pass = v.value.is_exact() ? v.value.sign() >= 0 : v.value.to_double() >= -tol;
  return v;
}

}  // namespace dunkl
