#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dunkl/matrix.hpp"
#include "dunkl/scalar.hpp"

namespace dunkl {

/// Mirror image of x in the hyperplane orthogonal to `root`:
/// x - 2 <root, x> / |root|^2 * root.
Vector reflect(const Vector& root, const Vector& x);

/// Positive roots with their orbit partition. Roots are stored as given
/// (any nonzero rational representative); |root|^2 is carried alongside.
class RootSystem {
 public:
  /// Validates the roots (nonzero, pairwise non-parallel, closed under the
  /// reflections up to sign) and computes the orbit partition.
  static RootSystem from_positive_roots(std::vector<Vector> roots, double float_tol = 1e-9);

  std::size_t dim() const { return dim_; }
  Mode mode() const { return mode_; }
  std::size_t size() const { return roots_.size(); }
  const std::vector<Vector>& roots() const { return roots_; }
  const Vector& root(std::size_t i) const { return roots_.at(i); }
  const Scalar& squared_length(std::size_t i) const { return squared_lengths_.at(i); }
  std::size_t orbit_count() const { return orbits_.size(); }
  const std::vector<std::vector<std::size_t>>& orbits() const { return orbits_; }
  std::size_t orbit_of(std::size_t root) const { return orbit_of_.at(root); }
  /// Index of the positive root parallel to v, if any.
  std::optional<std::size_t> find(const Vector& v) const;
  /// Optional preset label, e.g. "B2".
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

 private:
  std::size_t dim_ = 0;
  Mode mode_ = Mode::exact;
  std::vector<Vector> roots_;
  std::vector<Scalar> squared_lengths_;
  std::vector<std::vector<std::size_t>> orbits_;
  std::vector<std::size_t> orbit_of_;
  std::string label_;
  double tol_ = 1e-9;
};

class ClosureBoundExceeded : public Error {
 public:
  using Error::Error;
};

/// Finite reflection group as an explicit list of orthogonal matrices;
/// element 0 is the identity.
class ReflectionGroup {
 public:
  std::size_t dim() const { return dim_; }
  Mode mode() const { return mode_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Matrix>& elements() const { return elements_; }
  const Matrix& element(std::size_t i) const { return elements_.at(i); }
  /// sigma_alpha for each positive root, in root order.
  const std::vector<Matrix>& generators() const { return generators_; }
  /// Index of the inverse (transpose) of element i.
  std::size_t inverse(std::size_t i) const { return inverse_.at(i); }
  /// Elements that are reflections (g^2 = I, trace N - 2).
  std::vector<std::size_t> reflections() const;
  std::optional<std::size_t> find(const Matrix& g) const;

 private:
  friend ReflectionGroup build_group(const RootSystem& roots, std::size_t bound);
  std::size_t dim_ = 0;
  Mode mode_ = Mode::exact;
  std::vector<Matrix> elements_;
  std::vector<Matrix> generators_;
  std::vector<std::size_t> inverse_;
  std::vector<std::string> keys_;
};

inline constexpr std::size_t kDefaultClosureBound = 1'000'000;

/// Product closure of the root reflections.
ReflectionGroup build_group(const RootSystem& roots, std::size_t bound = kDefaultClosureBound);

/// G-invariant parameters, one value per root orbit.
class MultiplicityFunction {
 public:
  MultiplicityFunction(const RootSystem& roots, std::vector<Scalar> orbit_values);

  const std::vector<Scalar>& orbit_values() const { return orbit_values_; }
  /// k(alpha) for positive root index i.
  const Scalar& operator()(std::size_t root) const { return per_root_.at(root); }
  /// gamma = sum over positive roots of k(alpha).
  const Scalar& gamma() const { return gamma_; }
  bool nonnegative() const;
  bool is_zero() const;

 private:
  std::vector<Scalar> orbit_values_;
  std::vector<Scalar> per_root_;
  Scalar gamma_;
};

/// Preset families: "Z2" (Z2^N), "A" (A_{N-1} in R^N), "B", "D", "I2".
/// `n` is the ambient dimension (ignored for I2, which takes `m`).
///
/// Exact dihedral groups use rational realizations: I2(2) = Z2^2 in R^2,
/// I2(4) = B2, I2(3) = A2 in R^3 and I2(6) = G2 in the sum-zero plane of
/// R^3. Any other m needs floating mode.
RootSystem builtin_preset(const std::string& name, std::size_t n, unsigned m, Mode mode);

}  // namespace dunkl
