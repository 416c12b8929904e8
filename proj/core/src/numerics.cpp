#include "dunkl/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

namespace dunkl::numerics {

QuadratureRule gauss_legendre(std::size_t n) {
  if (n == 0) throw std::invalid_argument("gauss_legendre: need n >= 1");
  QuadratureRule rule;
  rule.nodes.assign(n, 0.0);
  rule.weights.assign(n, 0.0);
  const std::size_t half = (n + 1) / 2;
  for (std::size_t i = 0; i < half; ++i) {
    double z = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
    double pp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1.0;
      double p2 = 0.0;
      for (std::size_t j = 1; j <= n; ++j) {
        double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / static_cast<double>(j);
      }
      pp = static_cast<double>(n) * (z * p1 - p2) / (z * z - 1.0);
      double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) < 1e-16) break;
    }
    rule.nodes[i] = -z;
    rule.nodes[n - 1 - i] = z;
    double w = 2.0 / ((1.0 - z * z) * pp * pp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

QuadratureRule composite_symmetric(double radius, std::size_t panels, std::size_t points_per_panel) {
  if (panels == 0 || points_per_panel == 0 || !(radius > 0))
    throw std::invalid_argument("composite_symmetric: bad parameters");
  QuadratureRule base = gauss_legendre(points_per_panel);
  QuadratureRule rule;
  const double h = radius / static_cast<double>(panels);
  for (std::size_t side = 0; side < 2; ++side)
    for (std::size_t p = 0; p < panels; ++p) {
      double a = side == 0 ? -radius + h * p : h * p;
      double mid = a + h / 2;
      for (std::size_t q = 0; q < base.nodes.size(); ++q) {
        rule.nodes.push_back(mid + h / 2 * base.nodes[q]);
        rule.weights.push_back(h / 2 * base.weights[q]);
      }
    }
  return rule;
}

double integrate_finite(const std::function<double(double)>& f, double a, double b, double rel_tol) {
  boost::math::quadrature::tanh_sinh<double> integrator;
  return integrator.integrate([&f](double t) { return f(t); }, a, b, rel_tol);
}

double integrate_half_line(const std::function<double(double)>& f, double rel_tol) {
  boost::math::quadrature::exp_sinh<double> integrator;
  return integrator.integrate([&f](double t) { return f(t); }, rel_tol);
}

namespace {

// In-place Householder reduction of a symmetric matrix to tridiagonal form.
void tridiagonalize(std::vector<double>& a, std::size_t n, std::vector<double>& diag, std::vector<double>& off) {
  auto at = [&](std::size_t r, std::size_t c) -> double& { return a[r * n + c]; };
  std::vector<double> v(n), p(n), q(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double sigma = 0;
    for (std::size_t i = k + 1; i < n; ++i) sigma += at(i, k) * at(i, k);
    double xnorm = std::sqrt(sigma);
    if (xnorm == 0) continue;
    double alpha = at(k + 1, k) > 0 ? -xnorm : xnorm;
    std::fill(v.begin(), v.end(), 0.0);
    for (std::size_t i = k + 1; i < n; ++i) v[i] = at(i, k);
    v[k + 1] -= alpha;
    double vnorm = 0;
    for (std::size_t i = k + 1; i < n; ++i) vnorm += v[i] * v[i];
    vnorm = std::sqrt(vnorm);
    if (vnorm == 0) continue;
    for (std::size_t i = k + 1; i < n; ++i) v[i] /= vnorm;
    // A <- H A H with H = I - 2 v v^T on the trailing block.
    double kdot = 0;
    for (std::size_t i = k + 1; i < n; ++i) {
      p[i] = 0;
      for (std::size_t j = k + 1; j < n; ++j) p[i] += at(i, j) * v[j];
      kdot += v[i] * p[i];
    }
    for (std::size_t i = k + 1; i < n; ++i) q[i] = p[i] - kdot * v[i];
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) at(i, j) -= 2 * (v[i] * q[j] + q[i] * v[j]);
    at(k + 1, k) = at(k, k + 1) = alpha;
    for (std::size_t i = k + 2; i < n; ++i) at(i, k) = at(k, i) = 0;
  }
  diag.resize(n);
  off.assign(n > 0 ? n - 1 : 0, 0.0);
  for (std::size_t i = 0; i < n; ++i) diag[i] = at(i, i);
  for (std::size_t i = 0; i + 1 < n; ++i) off[i] = at(i + 1, i);
}

// Number of eigenvalues of the tridiagonal matrix strictly below x.
std::size_t sturm_count(const std::vector<double>& d, const std::vector<double>& e, double x) {
  std::size_t count = 0;
  double q = 1;
  for (std::size_t i = 0; i < d.size(); ++i) {
    double e2 = i == 0 ? 0.0 : e[i - 1] * e[i - 1];
    q = d[i] - x - (i == 0 ? 0.0 : e2 / q);
    if (q == 0) q = -1e-300;
    if (q < 0) ++count;
  }
  return count;
}

}  // namespace

std::vector<double> symmetric_eigenvalues(std::vector<double> a, std::size_t n) {
  if (a.size() != n * n) throw std::invalid_argument("symmetric_eigenvalues: size mismatch");
  if (n == 0) return {};
  std::vector<double> d, e;
  tridiagonalize(a, n, d, e);
  double lo = d[0], hi = d[0];
  for (std::size_t i = 0; i < n; ++i) {
    double r = (i > 0 ? std::abs(e[i - 1]) : 0.0) + (i + 1 < n ? std::abs(e[i]) : 0.0);
    lo = std::min(lo, d[i] - r);
    hi = std::max(hi, d[i] + r);
  }
  double scale = std::max({std::abs(lo), std::abs(hi), 1e-300});
  std::vector<double> eig(n);
  for (std::size_t k = 0; k < n; ++k) {
    double a_lo = lo, a_hi = hi;
    // eig[k] is the smallest x with count(x) > k.
    for (int iter = 0; iter < 200 && a_hi - a_lo > 4e-16 * scale; ++iter) {
      double mid = 0.5 * (a_lo + a_hi);
      if (sturm_count(d, e, mid) > k)
        a_hi = mid;
      else
        a_lo = mid;
    }
    eig[k] = 0.5 * (a_lo + a_hi);
  }
  return eig;
}

std::vector<double> hermitian_eigenvalues(const std::vector<std::complex<double>>& h, std::size_t n) {
  if (h.size() != n * n) throw std::invalid_argument("hermitian_eigenvalues: size mismatch");
  const std::size_t m = 2 * n;
  std::vector<double> big(m * m);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      double re = h[r * n + c].real();
      double im = h[r * n + c].imag();
      big[r * m + c] = re;
      big[(r + n) * m + c + n] = re;
      big[r * m + c + n] = -im;
      big[(r + n) * m + c] = im;
    }
  std::vector<double> all = symmetric_eigenvalues(std::move(big), m);
  std::vector<double> out;
  for (std::size_t i = 0; i < m; i += 2) out.push_back(0.5 * (all[i] + all[i + 1]));
  return out;
}

std::complex<double> hyp1f1_series(double a, double b, std::complex<double> z, double rel_tol) {
  std::complex<double> term = 1.0;
  std::complex<double> sum = 1.0;
  for (int n = 0; n < 100000; ++n) {
    term *= (a + n) / (b + n) * z / static_cast<double>(n + 1);
    sum += term;
    if (std::abs(term) <= rel_tol * std::abs(sum) && n > std::abs(z)) return sum;
    if (term == 0.0) return sum;
  }
  throw std::runtime_error("hyp1f1_series did not converge");
}

double exp_tail(double t, unsigned order) {
  if (t < 0) throw std::invalid_argument("exp_tail: t must be nonnegative");
  if (t == 0) return 0;
  double n = static_cast<double>(order) + 1;
  double term = std::exp(n * std::log(t) - std::lgamma(n + 1));
  double sum = 0;
  while (term > 0) {
    sum += term;
    term *= t / (n + 1);
    n += 1;
    if (n > t && term < 1e-20 * sum) break;
  }
  return sum;
}

}  // namespace dunkl::numerics
