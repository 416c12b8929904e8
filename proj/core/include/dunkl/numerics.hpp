#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

namespace dunkl::numerics {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1] (Newton iteration on P_n).
QuadratureRule gauss_legendre(std::size_t n);

/// Composite Gauss-Legendre rule on [-radius, radius] with `panels` panels
/// on each side of 0 (0 is always a panel boundary, never a node).
QuadratureRule composite_symmetric(double radius, std::size_t panels, std::size_t points_per_panel);

/// Integral over [a, b] by tanh-sinh; tolerates integrable endpoint
/// singularities such as (1 - t)^(k - 1) with k > 0.
double integrate_finite(const std::function<double(double)>& f, double a, double b, double rel_tol = 1e-13);

/// Integral over [0, inf) of a decaying integrand (exp-sinh).
double integrate_half_line(const std::function<double(double)>& f, double rel_tol = 1e-13);

/// Eigenvalues of a real symmetric matrix (row-major, n x n) in ascending
/// order: Householder tridiagonalization then Sturm-sequence bisection.
std::vector<double> symmetric_eigenvalues(std::vector<double> a, std::size_t n);

/// Eigenvalues of a Hermitian matrix via the real embedding [[A, -B], [B, A]];
/// each eigenvalue of the embedding appears twice and is reported once.
std::vector<double> hermitian_eigenvalues(const std::vector<std::complex<double>>& h, std::size_t n);

/// Direct power series of 1F1(a; b; z) summed until terms fall below
/// `rel_tol` of the running sum.
std::complex<double> hyp1f1_series(double a, double b, std::complex<double> z, double rel_tol = 1e-17);

/// sum_{n > order} t^n / n!, the tail of exp(t) beyond `order` (t >= 0).
double exp_tail(double t, unsigned order);

}  // namespace dunkl::numerics
