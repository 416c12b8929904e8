#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dunkl/matrix.hpp"
#include "dunkl/scalar.hpp"

namespace dunkl {

inline constexpr std::size_t kMaxVariables = 8;

/// Exponent vector x^nu of a fixed number of variables.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t dim);
  Monomial(std::initializer_list<unsigned> exponents);
  explicit Monomial(std::span<const unsigned> exponents);

  std::size_t dim() const { return dim_; }
  unsigned degree() const { return degree_; }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, unsigned e);

  /// x^nu * x_i, and x^nu / x_i (requires nu_i > 0).
  Monomial times(std::size_t i, unsigned e = 1) const;
  Monomial divided(std::size_t i) const;
  Monomial operator*(const Monomial& o) const;
  /// True when every exponent of `o` is <= ours.
  bool divisible_by(const Monomial& o) const;

  std::string to_string() const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.dim_ == b.dim_ && a.exps_ == b.exps_;
  }
  /// Position order of the global graded-lex basis: lower total degree
  /// first; within a degree x1^n, x1^(n-1) x2, ..., xN^n.
  friend bool operator<(const Monomial& a, const Monomial& b);

 private:
  std::array<std::uint16_t, kMaxVariables> exps_{};
  std::uint8_t dim_ = 0;
  std::uint16_t degree_ = 0;
};

/// Monomials of exact degree n in graded-lex position order.
const std::vector<Monomial>& homogeneous_basis(std::size_t dim, unsigned degree);
/// Index of `m` inside homogeneous_basis(m.dim(), m.degree()).
std::size_t basis_index(const Monomial& m);
/// Monomials of degree <= n (the space Pi_n), graded-lex order.
std::vector<Monomial> basis_up_to(std::size_t dim, unsigned degree);

/// Sparse multivariate polynomial with exact or floating coefficients.
/// Zero coefficients are never stored, so equal polynomials have identical
/// term maps.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Scalar>;

  Polynomial() = default;
  explicit Polynomial(std::size_t dim, Mode mode = Mode::exact);

  static Polynomial constant(std::size_t dim, const Scalar& c);
  static Polynomial variable(std::size_t dim, std::size_t i, Mode mode = Mode::exact);
  static Polynomial monomial(const Monomial& m, const Scalar& c);
  static Polynomial linear_form(const Vector& coefficients);
  /// Parses `3/2*x1^2*x2 - x2^3 + 1`; `x` is accepted for x1 when dim == 1.
  static Polynomial parse(std::string_view text, std::size_t dim, Mode mode = Mode::exact);

  std::size_t dim() const { return dim_; }
  Mode mode() const { return mode_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  Scalar coefficient(const Monomial& m) const;
  bool is_homogeneous() const;

  void add_term(const Monomial& m, const Scalar& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Scalar& s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Scalar& s) { return a *= s; }
  friend Polynomial operator*(const Scalar& s, Polynomial a) { return a *= s; }
  Polynomial operator-() const;
  Polynomial pow(unsigned e) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

  Scalar evaluate(std::span<const Scalar> x) const;
  /// Evaluation in double precision regardless of mode.
  double evaluate_double(std::span<const double> x) const;

  Polynomial derivative(std::size_t i) const;
  Polynomial directional_derivative(const Vector& xi) const;
  /// Homogeneous component of degree n.
  Polynomial homogeneous_part(unsigned n) const;
  /// Nonzero homogeneous components in increasing degree.
  std::vector<std::pair<unsigned, Polynomial>> homogeneous_parts() const;

  /// p(M x) for an arbitrary square matrix M.
  Polynomial substitute(const Matrix& m) const;

  /// Coefficient-wise conversion to another mode.
  Polynomial as(Mode mode) const;
  /// Drops floating coefficients with |c| <= tol (no-op in exact mode).
  Polynomial chopped(double tol) const;
  double max_abs_coefficient() const;

  std::string to_string() const;

 private:
  std::size_t dim_ = 0;
  Mode mode_ = Mode::exact;
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);


/// x -> p(g^{-1} x) for orthogonal g (checked).
Polynomial linear_substitute(const Polynomial& p, const Matrix& g);

struct Division {
  Polynomial quotient;
  Polynomial remainder;
};

/// Division by the linear form <a, x>; the remainder does not involve the
/// pivot variable (first index with a_i != 0).
Division divide_by_linear(const Polynomial& p, const Vector& a);

/// Exact quotient p / <a, x>; throws DivisionRemainder when it does not divide.
Polynomial exact_divide_by_linear(const Polynomial& p, const Vector& a, double float_tol = 1e-9);

class DivisionRemainder : public Error {
 public:
  using Error::Error;
};

/// Sampling lower bound for sum_n sup_{|x| <= r} |p_n(x)| over the
/// homogeneous parts p_n. Not a certified supremum: it takes the maximum over
/// the first `samples` points of a fixed low-discrepancy sequence on the
/// sphere of radius r, so it is nondecreasing in `samples`.
double ar_norm_estimate(const Polynomial& p, double r, std::size_t samples);

}  // namespace dunkl
