#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "dunkl/matrix.hpp"
#include "dunkl/polynomial.hpp"
#include "dunkl/reflection.hpp"

namespace dunkl {

/// Linear operator on polynomials, defined by its action on monomials.
///
/// Monomial images are memoized on first use and shared between copies, so
/// an operator is effectively its column cache in the global monomial basis.
/// `degree_shift` bounds how much the operator can raise the degree:
/// deg(A x^nu) <= |nu| + degree_shift. A negative shift means the operator
/// is degree-lowering (A(Pi_n) in Pi_{n-1}), hence nilpotent on every Pi_n.
class PolyOperator {
 public:
  using MonomialImage = std::function<Polynomial(const Monomial&)>;

  PolyOperator() = default;
  PolyOperator(std::size_t dim, Mode mode, int degree_shift, MonomialImage image, std::string name = {});

  static PolyOperator identity(std::size_t dim, Mode mode);
  static PolyOperator zero(std::size_t dim, Mode mode);

  std::size_t dim() const;
  Mode mode() const;
  int degree_shift() const;
  bool lowers_degree() const { return degree_shift() < 0; }
  const std::string& name() const;

  const Polynomial& image(const Monomial& m) const;
  Polynomial apply(const Polynomial& p) const;
  Polynomial operator()(const Polynomial& p) const { return apply(p); }

  friend PolyOperator operator+(const PolyOperator& a, const PolyOperator& b);
  friend PolyOperator operator-(const PolyOperator& a, const PolyOperator& b);
  friend PolyOperator operator*(const Scalar& s, const PolyOperator& a);
  /// Composition: (a * b)(p) = a(b(p)).
  friend PolyOperator operator*(const PolyOperator& a, const PolyOperator& b);

  /// Copy of this operator whose image of `m` is replaced; used to inject
  /// faults into negative controls.
  PolyOperator with_image(const Monomial& m, Polynomial image) const;

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

// ------------------------------------------------------ basic operators

PolyOperator partial_derivative_operator(std::size_t dim, std::size_t i, Mode mode);
PolyOperator directional_derivative_operator(const Vector& xi);
PolyOperator classical_laplacian_operator(std::size_t dim, Mode mode);
/// f -> (f - f o sigma_alpha) / <alpha, x>.
PolyOperator difference_quotient_operator(const Vector& alpha);
/// delta_alpha f = <grad f, alpha>/<alpha,x> - |alpha|^2/2 (f - f o sigma_alpha)/<alpha,x>^2,
/// which is unchanged when alpha is rescaled.
PolyOperator delta_operator(const Vector& alpha);
/// e^{tA} as an operator (requires A degree-lowering).
PolyOperator exp_operator(const PolyOperator& a, const Scalar& t);

// ------------------------------------------------------- Dunkl setting

/// Root system, its group, a multiplicity function and the working degree.
struct DunklParams {
  RootSystem roots;
  ReflectionGroup group;
  MultiplicityFunction k;
  unsigned n_max = 6;

  static DunklParams make(RootSystem roots, std::vector<Scalar> orbit_values, unsigned n_max,
                          std::size_t closure_bound = kDefaultClosureBound);

  std::size_t dim() const { return roots.dim(); }
  Mode mode() const { return roots.mode(); }
};

/// The Dunkl operators of a DunklParams together with the derived operators
/// (generalized Laplacian in both forms, L_k). All operators are built once
/// and share their monomial caches.
class DunklOperators {
 public:
  explicit DunklOperators(DunklParams params);

  const DunklParams& params() const { return params_; }
  std::size_t dim() const { return params_.dim(); }
  Mode mode() const { return params_.mode(); }

  /// T_{e_i}(k).
  const PolyOperator& dunkl(std::size_t i) const { return dunkl_.at(i); }
  /// T_xi(k) = sum_i xi_i T_{e_i}(k).
  PolyOperator dunkl(const Vector& xi) const;
  const PolyOperator& difference_quotient(std::size_t root) const { return quotients_.at(root); }
  const PolyOperator& delta(std::size_t root) const { return deltas_.at(root); }

  /// sum_i T_{e_i}^2.
  const PolyOperator& laplacian_squares() const { return laplacian_squares_; }
  /// Delta + 2 sum_alpha k(alpha) delta_alpha.
  const PolyOperator& laplacian_reflection() const { return laplacian_reflection_; }
  const PolyOperator& classical_laplacian() const { return classical_laplacian_; }
  /// L_k = Delta_k - Delta = 2 sum_alpha k(alpha) delta_alpha.
  const PolyOperator& reflection_part() const { return reflection_part_; }

 private:
  DunklParams params_;
  std::vector<PolyOperator> quotients_;
  std::vector<PolyOperator> deltas_;
  std::vector<PolyOperator> dunkl_;
  PolyOperator laplacian_squares_;
  PolyOperator laplacian_reflection_;
  PolyOperator classical_laplacian_;
  PolyOperator reflection_part_;
};

Polynomial dunkl_apply(const DunklOperators& ops, const Vector& xi, const Polynomial& p);
Polynomial delta_alpha_apply(const Vector& alpha, const Polynomial& p);

enum class LaplacianRoute { sum_of_squares, reflection_form };
Polynomial laplacian_apply(const DunklOperators& ops, const Polynomial& p,
                           LaplacianRoute route = LaplacianRoute::sum_of_squares);

// ------------------------------------------ degree-lowering operator calculus

/// Matrix of A on Pi_n (all monomials of degree <= n, graded-lex order);
/// column j holds the coordinates of A(basis_j).
Matrix operator_matrix(const PolyOperator& a, unsigned n);
/// Checks A(x^nu) has degree < |nu| for every monomial of degree <= n.
bool verify_degree_lowering(const PolyOperator& a, unsigned n);

/// e^{tA} p by the terminating series.
Polynomial exp_apply(const PolyOperator& a, const Scalar& t, const Polynomial& p);
/// (lambda I - A)^{-1} p by the finite Neumann series.
Polynomial resolvent_apply(const PolyOperator& a, const Scalar& lambda, const Polynomial& p);
/// (I - A/n)^{-n} p.
Polynomial euler_approx(const PolyOperator& a, unsigned n, const Polynomial& p);
/// (e^{A/n} e^{B/n})^n p.
Polynomial trotter_approx(const PolyOperator& a, const PolyOperator& b, unsigned n, const Polynomial& p);

// ------------------------------------------------- one-variable operators

/// D^2 on one variable.
PolyOperator second_derivative_1d(Mode mode = Mode::exact);
/// delta p = p'/x - (p(x) - p(-x)) / (2 x^2) on one variable.
PolyOperator delta_1d(Mode mode = Mode::exact);
/// Lambda_s = e^{-s D^2} delta e^{s D^2}.
PolyOperator lambda_s_operator(const Scalar& s);
Polynomial lambda_s_apply(const Scalar& s, const Polynomial& p);

/// p' - (x q - 2 s q') for even p; zero iff q = Lambda_s p.
Polynomial lambda_ode_residual(const Scalar& s, const Polynomial& p, const Polynomial& q);
/// d/dx (e^{sD^2} p / x) - e^{sD^2} q for odd p; zero iff q = Lambda_s p.
Polynomial lambda_odd_residual(const Scalar& s, const Polynomial& p, const Polynomial& q);

/// Unique polynomial solution y of c y' - x y = p for odd p (c > 0).
Polynomial ode_poly_solve(const Scalar& c, const Polynomial& p);

/// e^{cD^2}(x p) - x e^{cD^2} p - 2c e^{cD^2} p'.
Polynomial exp_conjugate_identity_check(const Scalar& c, const Polynomial& p);

/// Gaussian-integral form of Lambda_s for s > 0, evaluated by quadrature:
///   -p(x)/(2s) - weight/(4 s^2) * I(x),
///   I(x) = e^{x^2/4s} (int_{-inf}^x g - int_{-x}^inf g),  g(t) = e^{-t^2/4s} (t + x) p(t).
/// weight = 1/2 reproduces Lambda_s (the symmetric-odd split of the
/// integrand); weight = 1 is the variant without the factor 1/2.
double lambda_s_closed_form(double s, const Polynomial& p, double x, double weight = 0.5);

struct MinimumPrincipleVerdict {
  bool pass = false;
  Scalar value;  // A p (x0)
};

/// At a zero x0 of a nonnegative p (caller's obligation), checks A p(x0) >= 0
/// (exactly in exact mode, >= -tol in floating mode). Throws if p(x0) != 0.
MinimumPrincipleVerdict minimum_principle_check(const PolyOperator& a, const Polynomial& p, const Vector& x0,
                                                double tol = 1e-12);

}  // namespace dunkl
