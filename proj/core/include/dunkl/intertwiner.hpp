#pragma once

#include <cstddef>
#include <vector>

#include <nlohmann/json.hpp>

#include "dunkl/operators.hpp"

namespace dunkl {

/// Raised when the intertwining system has no unique solution at some
/// degree (k lies in the singular set).
class SingularMultiplicity : public Error {
 public:
  SingularMultiplicity(unsigned degree, const std::string& detail);
  unsigned degree() const { return degree_; }

 private:
  unsigned degree_;
};

/// V_k on Pi_{n_max}, stored as one square matrix per degree. Column j of
/// block n holds the coordinates of V_k(basis_j) in homogeneous_basis(N, n).
class IntertwinerTable {
 public:
  IntertwinerTable(DunklParams params, std::vector<Matrix> blocks);

  const DunklParams& params() const { return params_; }
  std::size_t dim() const { return params_.dim(); }
  Mode mode() const { return params_.mode(); }
  unsigned n_max() const { return static_cast<unsigned>(blocks_.size()) - 1; }
  const Matrix& block(unsigned degree) const;

  /// V_k(x^nu).
  Polynomial image(const Monomial& nu) const;

  /// Copy with a single matrix entry replaced (negative controls).
  IntertwinerTable with_entry(unsigned degree, std::size_t row, std::size_t col, const Scalar& value) const;

  /// {group, roots, k, mode, dimension, n_max, degrees: {"n": rows of strings}}.
  nlohmann::json to_json() const;
  static IntertwinerTable from_json(const nlohmann::json& j);

  friend bool operator==(const IntertwinerTable& a, const IntertwinerTable& b);

 private:
  DunklParams params_;
  std::vector<Matrix> blocks_;
};

/// Solves T_i u = nu_i V_k(x^{nu - e_i}) (i = 1..N) for u in P_n, degree by
/// degree, by exact elimination on the stacked system. Every solution is
/// checked against the full system before it is accepted.
IntertwinerTable build_vk(const DunklOperators& ops, unsigned n_max);
IntertwinerTable build_vk(const DunklParams& params);

Polynomial vk_apply(const IntertwinerTable& table, const Polynomial& p);
PolyOperator vk_operator(const IntertwinerTable& table);

/// T_{e_i} V_k(x^nu) - nu_i V_k(x^{nu - e_i}).
Polynomial intertwining_residual(const DunklOperators& ops, const IntertwinerTable& table, const Monomial& nu,
                                 std::size_t i);

/// m_{k,nu} = V_k(x^nu).
Polynomial moment_function(const IntertwinerTable& table, const Monomial& nu);

// ------------------------------------------------------------ rank one

/// c_k^beta = Gamma(k + 1/2) / (Gamma(1/2) Gamma(k)).
double beta_constant(double k);

/// b_n(k) = c_k^beta int_{-1}^1 t^n (1-t)^{k-1} (1+t)^k dt in closed form:
/// b_{2m} = (1/2)_m / (k+1/2)_m and b_{2m+1} = (1/2)_{m+1} / (k+1/2)_{m+1}.
Scalar beta_moment_exact(const Scalar& k, unsigned n);

/// The same moment by adaptive Gauss-Kronrod quadrature. The interval is
/// split at 0 and each half is substituted so that the endpoint factors
/// become bounded powers of the new variable.
double beta_moment_quadrature(double k, unsigned n, double rel_tol = 1e-13);

enum class BetaRoute { quadrature, exact };

/// V_k p for one variable via the beta density: x^n -> b_n(k) x^n.
/// The quadrature route works in floating mode; the exact route keeps the
/// mode of p.
Polynomial vk_1d_closed(const Scalar& k, const Polynomial& p, BetaRoute route = BetaRoute::quadrature);

/// prod_i b_{nu_i}(k_i), the coefficient of V_k(x^nu) = c x^nu on Z2^N.
Scalar vk_z2n_tensor(const std::vector<Scalar>& k, const Monomial& nu);
/// k value of each coordinate axis; throws unless every root is a
/// coordinate axis and each axis carries one root.
std::vector<Scalar> z2n_multiplicities(const DunklParams& params);
/// Same, reading k from the parameters.
Scalar vk_z2n_tensor(const DunklParams& params, const Monomial& nu);

}  // namespace dunkl
