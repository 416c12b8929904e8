#include "dunkl/kernel.hpp"

#include <algorithm>
#include <cmath>

#include "dunkl/numerics.hpp"

namespace dunkl {

namespace {

Vector in_mode(const Vector& v, Mode mode) {
  Vector out;
  out.reserve(v.size());
  for (const auto& c : v) out.push_back(c.as(mode));
  return out;
}

ComplexVector in_mode(const ComplexVector& z, Mode mode) { return {in_mode(z.re, mode), in_mode(z.im, mode)}; }

ComplexScalar czero(Mode mode) { return {Scalar::zero(mode), Scalar::zero(mode)}; }

// p[i][e] = z_i^e / e! for e <= order.
std::vector<std::vector<ComplexScalar>> scaled_powers(const ComplexVector& z, unsigned order, Mode mode) {
  std::vector<std::vector<ComplexScalar>> p(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    ComplexScalar zi{z.re[i], z.im[i]};
    p[i].push_back({Scalar::one(mode), Scalar::zero(mode)});
    for (unsigned e = 1; e <= order; ++e)
      p[i].push_back(Scalar::integer(e, mode).inverse() * (p[i].back() * zi));
  }
  return p;
}

std::vector<std::vector<Scalar>> real_powers(const Vector& x, unsigned order, Mode mode) {
  std::vector<std::vector<Scalar>> p(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    p[i].push_back(Scalar::one(mode));
    for (unsigned e = 1; e <= order; ++e) p[i].push_back(p[i].back() * x[i]);
  }
  return p;
}

double complex_norm(const ComplexVector& z) {
  double s = 0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    double a = z.re[i].to_double();
    double b = z.im[i].to_double();
    s += a * a + b * b;
  }
  return std::sqrt(s);
}

ComplexVector transform(const Matrix& g, const ComplexVector& z) { return {g * z.re, g * z.im}; }

}  // namespace

ComplexVector ComplexVector::real(Vector v) {
  Mode mode = v.empty() ? Mode::exact : v.front().mode();
  std::size_t n = v.size();
  return {std::move(v), zero_vector(n, mode)};
}

ComplexVector ComplexVector::imaginary(Vector v) {
  Mode mode = v.empty() ? Mode::exact : v.front().mode();
  std::size_t n = v.size();
  return {zero_vector(n, mode), std::move(v)};
}

double ComplexVector::norm() const { return complex_norm(*this); }

KernelTruncation::KernelTruncation(IntertwinerTable table, unsigned order) : table_(std::move(table)), order_(order) {
  if (order_ > table_.n_max())
    throw Error("kernel truncation order " + std::to_string(order_) + " exceeds the table degree " +
                std::to_string(table_.n_max()));
}

ComplexScalar KernelTruncation::evaluate(const Vector& x_in, const ComplexVector& z_in, const Monomial& nu) const {
  if (x_in.size() != dim() || z_in.size() != dim() || nu.dim() != dim())
    throw DimensionMismatch("kernel: argument dimension differs from the table");
  const Mode m = mode();
  Vector x = in_mode(x_in, m);
  ComplexVector z = in_mode(z_in, m);
  auto xp = real_powers(x, order_, m);
  auto zp = scaled_powers(z, order_, m);
  ComplexScalar sum = czero(m);
  for (unsigned n = nu.degree(); n <= order_; ++n) {
    const auto& basis = homogeneous_basis(dim(), n);
    const Matrix& b = table_.block(n);
    std::vector<Scalar> xmono;
    xmono.reserve(basis.size());
    for (const auto& mu : basis) {
      Scalar v = Scalar::one(m);
      for (std::size_t i = 0; i < dim(); ++i) v *= xp[i][mu[i]];
      xmono.push_back(std::move(v));
    }
    for (std::size_t col = 0; col < basis.size(); ++col) {
      const Monomial& mu = basis[col];
      if (!mu.divisible_by(nu)) continue;
      // m_{k,mu}(x) from column col of the block.
      Scalar moment = Scalar::zero(m);
      for (std::size_t row = 0; row < basis.size(); ++row)
        if (!b(row, col).is_zero()) moment += b(row, col) * xmono[row];
      if (moment.is_zero()) continue;
      ComplexScalar zterm{moment, Scalar::zero(m)};
      for (std::size_t i = 0; i < dim(); ++i) zterm = zterm * zp[i][mu[i] - nu[i]];
      sum = sum + zterm;
    }
  }
  return sum;
}

ComplexScalar KernelTruncation::evaluate(const Vector& x, const ComplexVector& z) const {
  return evaluate(x, z, Monomial(dim()));
}

Polynomial KernelTruncation::homogeneous_term(unsigned n, const Vector& y_in) const {
  if (n > order_) throw Error("homogeneous_term: degree exceeds the truncation order");
  if (y_in.size() != dim()) throw DimensionMismatch("kernel: argument dimension differs from the table");
  const Mode m = mode();
  Vector y = in_mode(y_in, m);
  auto yp = real_powers(y, n, m);
  Polynomial out(dim(), m);
  for (const auto& nu : homogeneous_basis(dim(), n)) {
    Scalar c = Scalar::one(m);
    for (std::size_t i = 0; i < dim(); ++i) c *= yp[i][nu[i]] / factorial(nu[i], m);
    if (c.is_zero()) continue;
    out += c * table_.image(nu);
  }
  return out;
}

KernelValue kernel_eval(const KernelTruncation& tr, const Vector& x, const ComplexVector& y) {
  KernelValue out;
  out.exact = tr.evaluate(x, y);
  out.value = out.exact.to_complex();
  out.tail_bound = numerics::exp_tail(norm(x) * complex_norm(y), tr.order());
  out.order = tr.order();
  return out;
}

KernelValue bessel_eval(const KernelTruncation& tr, const Vector& x, const ComplexVector& y) {
  const ReflectionGroup& group = tr.table().params().group;
  const Mode m = tr.mode();
  ComplexVector ym = in_mode(y, m);
  if (ym.size() != tr.dim()) throw DimensionMismatch("kernel: argument dimension differs from the table");
  ComplexScalar sum = czero(m);
  for (const auto& g : group.elements()) sum = sum + tr.evaluate(x, transform(g, ym));
  Scalar inv = Scalar::integer(static_cast<long>(group.order()), m).inverse();
  KernelValue out;
  out.exact = inv * sum;
  out.value = out.exact.to_complex();
  out.tail_bound = numerics::exp_tail(norm(x) * complex_norm(y), tr.order());
  out.order = tr.order();
  return out;
}

BoundVerdict kernel_bound_check(const KernelTruncation& tr, const Vector& x, const ComplexVector& z,
                                const Monomial& nu, double tol, double max_tail) {
  if (nu.degree() > tr.order()) throw Error("kernel_bound_check: |nu| exceeds the truncation order");
  const double nx = norm(x);
  BoundVerdict out;
  out.tail = std::pow(nx, nu.degree()) * numerics::exp_tail(nx * complex_norm(z), tr.order() - nu.degree());
  if (!(out.tail <= max_tail))
    throw TailTooLarge("kernel tail bound " + std::to_string(out.tail) + " exceeds " + std::to_string(max_tail) +
                       "; raise the truncation order");
  double re_norm = 0;
  for (const auto& c : z.re) re_norm += c.to_double() * c.to_double();
  re_norm = std::sqrt(re_norm);
  out.value = std::abs(tr.evaluate(x, z, nu).to_complex());
  out.bound = std::pow(nx, nu.degree()) * std::exp(nx * re_norm);
  out.margin = out.bound + out.tail + tol - out.value;
  out.pass = out.margin >= 0;
  return out;
}

GramResult gram_psd_check(const KernelTruncation& tr, const std::vector<Vector>& points, const Vector& y, double tol,
                          bool bessel, double max_tail) {
  const std::size_t m = points.size();
  if (m == 0) throw Error("gram_psd_check: no points");
  if (m > 16) throw Error("gram_psd_check: at most 16 points");
  ComplexVector iy = ComplexVector::imaginary(in_mode(y, tr.mode()));
  GramResult out;
  std::vector<std::complex<double>> h(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      Vector d = in_mode(points[i], tr.mode()) - in_mode(points[j], tr.mode());
      KernelValue v = bessel ? bessel_eval(tr, d, iy) : kernel_eval(tr, d, iy);
      out.tail = std::max(out.tail, v.tail_bound);
      h[i * m + j] = v.value;
    }
  }
  if (!(out.tail <= max_tail))
    throw TailTooLarge("Gram tail bound " + std::to_string(out.tail) + " exceeds " + std::to_string(max_tail) +
                       "; raise the truncation order");
  // Hermitian part.
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      std::complex<double> a = 0.5 * (h[i * m + j] + std::conj(h[j * m + i]));
      h[i * m + j] = a;
      h[j * m + i] = std::conj(a);
    }
  out.lambda_min = numerics::hermitian_eigenvalues(h, m).front();
  out.threshold = -(static_cast<double>(m) * out.tail + tol);
  out.pass = out.lambda_min >= out.threshold;
  return out;
}

Polynomial kernel_recursion_residual(const DunklOperators& ops, const KernelTruncation& tr, const Vector& xi,
                                     const Vector& y, unsigned n) {
  if (n + 1 > tr.order()) throw Error("kernel_recursion_residual: n + 1 exceeds the truncation order");
  Vector xm = in_mode(xi, tr.mode());
  Polynomial next = tr.homogeneous_term(n + 1, y);
  Polynomial cur = tr.homogeneous_term(n, y);
  return ops.dunkl(xm).apply(next) - dot(xm, in_mode(y, tr.mode())) * cur;
}

std::complex<double> rank_one_kernel_closed(double k, std::complex<double> xy) {
  return std::exp(xy) * numerics::hyp1f1_series(k, 2 * k + 1, -2.0 * xy);
}

// ------------------------------------------------------------ measures

double Measure1D::moment(unsigned n) const {
  double xv = x.to_double();
  if (k.sign() < 0) throw Error("Measure1D needs k >= 0");
  if (k.is_zero()) return std::pow(xv, n);
  return std::pow(xv, n) * beta_moment_quadrature(k.to_double(), n);
}

Scalar Measure1D::moment_exact(unsigned n) const {
  if (k.sign() < 0) throw Error("Measure1D needs k >= 0");
  return x.pow(n) * beta_moment_exact(k.as(x.mode()), n);
}

std::pair<Scalar, Scalar> Measure1D::support() const {
  if (k.is_zero()) return {x, x};
  Scalar a = x.abs();
  return {-a, a};
}

ProductMeasure ProductMeasure::at(const std::vector<Scalar>& k, const Vector& x) {
  if (k.size() != x.size()) throw DimensionMismatch("ProductMeasure: k and x differ in length");
  ProductMeasure mu;
  for (std::size_t i = 0; i < x.size(); ++i) mu.factors.push_back({x[i], k[i]});
  return mu;
}

double ProductMeasure::moment(const Monomial& nu) const {
  if (nu.dim() != factors.size()) throw DimensionMismatch("ProductMeasure: monomial dimension");
  double v = 1;
  for (std::size_t i = 0; i < factors.size(); ++i) v *= factors[i].moment(nu[i]);
  return v;
}

Scalar ProductMeasure::moment_exact(const Monomial& nu) const {
  if (nu.dim() != factors.size()) throw DimensionMismatch("ProductMeasure: monomial dimension");
  Mode m = factors.empty() ? Mode::exact : factors.front().x.mode();
  Scalar v = Scalar::one(m);
  for (std::size_t i = 0; i < factors.size(); ++i) v *= factors[i].moment_exact(nu[i]);
  return v;
}

double measure_moments(const Measure1D& mu, unsigned n) { return mu.moment(n); }
double measure_moments(const ProductMeasure& mu, const Monomial& nu) { return mu.moment(nu); }

TransformVerdict measure_transform_check(const IntertwinerTable& table, const Vector& x_in, const Scalar& r_in,
                                         const Matrix& g, double tol) {
  const DunklParams& params = table.params();
  const Mode m = table.mode();
  if (r_in.sign() <= 0) throw Error("measure_transform_check: r must be positive");
  if (x_in.size() != table.dim()) throw DimensionMismatch("measure_transform_check: x dimension");
  if (!params.group.find(g)) throw Error("measure_transform_check: g is not a group element");
  std::vector<Scalar> k = z2n_multiplicities(params);
  const std::size_t n = table.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && !g(i, j).is_zero()) throw Error("measure_transform_check: g must be diagonal");

  Vector x = in_mode(x_in, m);
  Scalar r = r_in.as(m);
  Vector gx = g * x;
  ProductMeasure mu = ProductMeasure::at(k, x);
  ProductMeasure mu_r = ProductMeasure::at(k, r * x);
  ProductMeasure mu_g = ProductMeasure::at(k, gx);

  TransformVerdict out;
  out.exact_identities = true;
  Matrix ginv = g.transpose();
  for (const auto& nu : basis_up_to(n, table.n_max())) {
    double base = mu.moment(nu);
    double rpow = std::pow(r.to_double(), nu.degree());
    double sign = 1;
    for (std::size_t i = 0; i < n; ++i)
      if (nu[i] % 2 == 1) sign *= g(i, i).to_double();
    double table_value = table.image(nu).evaluate(x).to_double();
    out.max_deviation = std::max({out.max_deviation, std::abs(mu_r.moment(nu) - rpow * base),
                                  std::abs(mu_g.moment(nu) - sign * base), std::abs(base - table_value)});

    Polynomial mnu = table.image(nu);
    Scalar lhs_r = mnu.evaluate(r * x);
    Scalar rhs_r = r.pow(nu.degree()) * mnu.evaluate(x);
    // m(g x) = V_k(x^nu o g)(x); linear_substitute(p, h) is p(h^{-1} .).
    Scalar lhs_g = mnu.evaluate(gx);
    Scalar rhs_g = vk_apply(table, linear_substitute(Polynomial::monomial(nu, Scalar::one(m)), ginv)).evaluate(x);
    if (m == Mode::exact) {
      if (lhs_r != rhs_r || lhs_g != rhs_g) out.exact_identities = false;
    } else if (std::abs((lhs_r - rhs_r).to_double()) > tol || std::abs((lhs_g - rhs_g).to_double()) > tol) {
      out.exact_identities = false;
    }
  }
  out.pass = out.exact_identities && out.max_deviation <= tol;
  return out;
}

HullVerdict support_hull_check(const DunklParams& params, const Vector& x_in) {
  std::vector<Scalar> k = z2n_multiplicities(params);
  const Mode m = params.mode();
  Vector x = in_mode(x_in, m);
  const std::size_t n = x.size();
  if (n != params.dim()) throw DimensionMismatch("support_hull_check: x dimension");
  HullVerdict out;
  for (const auto& g : params.group.elements()) {
    Vector gx = g * x;
    if (std::find(out.orbit.begin(), out.orbit.end(), gx) == out.orbit.end()) out.orbit.push_back(gx);
  }
  // Bounding box of the orbit.
  std::vector<std::pair<Scalar, Scalar>> box;
  for (std::size_t i = 0; i < n; ++i) {
    Scalar lo = out.orbit.front()[i], hi = lo;
    for (const auto& p : out.orbit) {
      if (p[i] < lo) lo = p[i];
      if (p[i] > hi) hi = p[i];
    }
    box.emplace_back(lo, hi);
  }
  // The hull is the box iff every box corner is an orbit point.
  bool hull_is_box = true;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    Vector corner(n);
    for (std::size_t i = 0; i < n; ++i) corner[i] = (mask >> i & 1) ? box[i].second : box[i].first;
    if (std::find(out.orbit.begin(), out.orbit.end(), corner) == out.orbit.end()) hull_is_box = false;
  }
  bool contained = true;
  ProductMeasure mu = ProductMeasure::at(k, x);
  for (std::size_t i = 0; i < n; ++i) {
    auto s = mu.factors[i].support();
    out.support.push_back(s);
    if (s.first < box[i].first || s.second > box[i].second) contained = false;
  }
  out.pass = hull_is_box && contained;
  return out;
}

}  // namespace dunkl
