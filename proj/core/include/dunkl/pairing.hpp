#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dunkl/intertwiner.hpp"

namespace dunkl {

/// [p, q]_k = (p(T) q)(0), with T_{e_i}(k) substituted for x_i.
Scalar pairing(const DunklOperators& ops, const Polynomial& p, const Polynomial& q);

/// [p, q]_0 = sum_nu nu! p_nu q_nu (the k = 0 pairing).
Scalar pairing_classical(const Polynomial& p, const Polynomial& q);

/// [V_k p, q]_k - [p, q]_0.
Scalar pairing_identity_residual(const DunklOperators& ops, const IntertwinerTable& table, const Polynomial& p,
                                 const Polynomial& q);

struct PairingPositivity {
  bool pass = false;
  Scalar value;  // [p, p]_k
};

/// [p, p]_k >= 0 (exact in exact mode).
PairingPositivity pairing_positivity_check(const DunklOperators& ops, const Polynomial& p);

/// Quadrature layout on [-radius_cutoff, radius_cutoff]^N. Each half-axis is
/// split into panels of Gauss-Legendre points, so 0 is a panel boundary and
/// no node sits on a coordinate hyperplane.
struct QuadSpec {
  std::size_t nodes_per_axis = 160;
  double radius_cutoff = 10.0;
  double tolerance = 1e-10;
  std::size_t points_per_panel = 16;
};

/// w_k(x) = prod_{alpha in R+} |<alpha, x>|^{2 k(alpha)} for the stored root
/// representatives.
class WeightData {
 public:
  WeightData(const RootSystem& roots, const MultiplicityFunction& k);
  double operator()(std::span<const double> x) const;
  std::size_t dim() const { return roots_.empty() ? 0 : roots_.front().size(); }

 private:
  std::vector<std::vector<double>> roots_;
  std::vector<double> exponents_;
};

struct GaussianPairing {
  double value = 0;
  /// c_k^gauss = (int e^{-|x|^2/2} w_k dx)^{-1} under the same rule.
  double c_gauss = 0;
  /// |value(nodes) - value(2 * nodes)|.
  double error_estimate = 0;
  bool converged = false;
};

/// c_k^gauss int (e^{-Delta_k/2} p)(e^{-Delta_k/2} q) e^{-|x|^2/2} w_k dx on a
/// tensor Gauss-Legendre grid (N <= 3). The rule is evaluated at the given
/// size and at twice as many panels; `converged` compares the two.
GaussianPairing gaussian_pairing_quadrature(const DunklOperators& ops, const Polynomial& p, const Polynomial& q,
                                            const QuadSpec& spec = {});

}  // namespace dunkl
