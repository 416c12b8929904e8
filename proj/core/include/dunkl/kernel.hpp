#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "dunkl/intertwiner.hpp"

namespace dunkl {

/// Complex number with Scalar parts; exact when the parts are rational.
struct ComplexScalar {
  Scalar re;
  Scalar im;

  static ComplexScalar real(const Scalar& r) { return {r, Scalar::zero(r.mode())}; }
  std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }

  friend ComplexScalar operator+(const ComplexScalar& a, const ComplexScalar& b) { return {a.re + b.re, a.im + b.im}; }
  friend ComplexScalar operator*(const ComplexScalar& a, const ComplexScalar& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend ComplexScalar operator*(const Scalar& s, const ComplexScalar& a) { return {s * a.re, s * a.im}; }
};

/// A point of C^N given by real and imaginary parts.
struct ComplexVector {
  Vector re;
  Vector im;

  static ComplexVector real(Vector v);
  static ComplexVector imaginary(Vector v);
  std::size_t size() const { return re.size(); }
  double norm() const;
};

/// K^{(M)}(x, y) = sum_{n <= M} sum_{|nu| = n} m_{k,nu}(x) y^nu / nu!.
class KernelTruncation {
 public:
  KernelTruncation(IntertwinerTable table, unsigned order);
  explicit KernelTruncation(IntertwinerTable table) : KernelTruncation(table, table.n_max()) {}

  const IntertwinerTable& table() const { return table_; }
  unsigned order() const { return order_; }
  std::size_t dim() const { return table_.dim(); }
  Mode mode() const { return table_.mode(); }

  /// sum_{|mu| <= M, mu >= nu} m_{k,mu}(x) z^{mu - nu} / (mu - nu)!, which is
  /// d^nu/dz^nu of the truncated series; nu = 0 gives K^{(M)} itself.
  ComplexScalar evaluate(const Vector& x, const ComplexVector& z, const Monomial& nu) const;
  ComplexScalar evaluate(const Vector& x, const ComplexVector& z) const;

  /// K_n(., y) as a polynomial in x for real y.
  Polynomial homogeneous_term(unsigned n, const Vector& y) const;

 private:
  IntertwinerTable table_;
  unsigned order_;
};

struct KernelValue {
  ComplexScalar exact;
  std::complex<double> value;
  double tail_bound = 0;
  unsigned order = 0;
};

/// Truncated kernel with the tail bound sum_{n > M} (|x||y|)^n / n!.
KernelValue kernel_eval(const KernelTruncation& tr, const Vector& x, const ComplexVector& y);

/// J^{(M)}(x, y) = |G|^{-1} sum_g K^{(M)}(x, g y).
KernelValue bessel_eval(const KernelTruncation& tr, const Vector& x, const ComplexVector& y);

class TailTooLarge : public Error {
 public:
  using Error::Error;
};

struct BoundVerdict {
  bool pass = false;
  double value = 0;  // |d^nu K^{(M)}(x, z)|
  double bound = 0;  // |x|^{|nu|} e^{|x| |Re z|}
  double tail = 0;
  double margin = 0;  // bound + tail + tol - value
};

/// Checks |d_z^nu K^{(M)}(x, z)| <= |x|^{|nu|} e^{|x||Re z|} + tail + tol.
/// Throws TailTooLarge when the truncation tail exceeds `max_tail`.
BoundVerdict kernel_bound_check(const KernelTruncation& tr, const Vector& x, const ComplexVector& z,
                                const Monomial& nu, double tol = 1e-10, double max_tail = 1e-8);

struct GramResult {
  double lambda_min = 0;
  double tail = 0;       // largest tail over the pairwise differences
  double threshold = 0;  // -(m * tail + tol)
  bool pass = false;
};

/// Smallest eigenvalue of [K^{(M)}(x_i - x_j, i y)]; PASS iff it is at
/// least -(m * tail + tol). With `bessel`, J replaces K.
GramResult gram_psd_check(const KernelTruncation& tr, const std::vector<Vector>& points, const Vector& y,
                          double tol = 1e-8, bool bessel = false, double max_tail = 1e-6);

/// T_xi K_{n+1}(., y) - <xi, y> K_n(., y).
Polynomial kernel_recursion_residual(const DunklOperators& ops, const KernelTruncation& tr, const Vector& xi,
                                     const Vector& y, unsigned n);

/// e^{xy} 1F1(k; 2k+1; -2xy), the closed form of the rank-one kernel, using
/// the direct 1F1 series.
std::complex<double> rank_one_kernel_closed(double k, std::complex<double> xy);

// ------------------------------------------------------- explicit measures

/// mu_x for Z2: the beta density c_k (1-t)^{k-1} (1+t)^k on [-1, 1] pushed
/// forward by t -> x t. k = 0 is the point mass at x.
struct Measure1D {
  Scalar x;
  Scalar k;

  /// int xi^n d mu_x by quadrature (floating).
  double moment(unsigned n) const;
  /// Same by the closed-form beta moments (mode of x).
  Scalar moment_exact(unsigned n) const;
  /// Support interval [lo, hi].
  std::pair<Scalar, Scalar> support() const;
};

/// mu_x for Z2^N as a product of rank-one measures.
struct ProductMeasure {
  std::vector<Measure1D> factors;

  static ProductMeasure at(const std::vector<Scalar>& k, const Vector& x);
  double moment(const Monomial& nu) const;
  Scalar moment_exact(const Monomial& nu) const;
};

double measure_moments(const Measure1D& mu, unsigned n);
double measure_moments(const ProductMeasure& mu, const Monomial& nu);

struct TransformVerdict {
  bool pass = false;
  double max_deviation = 0;      // quadrature moments
  bool exact_identities = false;  // table-level identities, exact
};

/// Checks mu_{rx} = mu_x(r^{-1} .) and mu_{gx} = mu_x(g^{-1} .) through the
/// moments of degree <= n_max, where g is a diagonal sign matrix, and the
/// exact statements m(rx) = r^{|nu|} m(x), m(gx) = V_k((g^{-1} .)^nu)(x)
/// on the table.
TransformVerdict measure_transform_check(const IntertwinerTable& table, const Vector& x, const Scalar& r,
                                         const Matrix& g, double tol = 1e-10);

struct HullVerdict {
  bool pass = false;
  std::vector<std::pair<Scalar, Scalar>> support;  // per coordinate
  std::vector<Vector> orbit;
};

/// Support of the product measure against the convex hull of the orbit G x:
/// the orbit hull is checked to be the box spanned by the orbit, and the
/// support box must equal it (k > 0) or be a subset of it.
HullVerdict support_hull_check(const DunklParams& params, const Vector& x);

}  // namespace dunkl
