#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dunkl/harness/config.hpp"
#include "dunkl/harness/report.hpp"

namespace dunkl::harness {

struct SuiteOptions {
  /// Negative control: corrupt the object under test in a fixed way
  /// (documented per suite); the suite must then FAIL.
  bool inject_fault = false;
  bool timing = true;
  /// Kernel truncation order for the numeric suite.
  std::optional<unsigned> order;
};

/// Exact residuals over the bases of Pi_{n_max}: commuting Dunkl operators,
/// both forms of Delta_k, T^2 = D^2 + 2 k delta on one variable, the Lambda_s
/// equations, the polynomial ODE solve, the intertwining relation, the
/// pairing identity [V_k p, q]_k = [p, q]_0 and the kernel recursion.
/// Fault: one entry of the degree-2 block of V_k is changed.
Report suite_identities(const Config& config, const SuiteOptions& options = {});

/// V_k p >= 0 for the nonnegative family on a dyadic ball grid, exactly.
/// Fault: V_k(x1^2) gets coefficient -1 on x1^2.
Report suite_positivity_vk(const Config& config, const SuiteOptions& options = {});

/// e^{-s Delta} e^{t L_k} e^{s Delta} and e^{-Delta/2} e^{Delta_k/2} applied
/// to the family stay >= 0 on the grid for s, t in {0, 1/2, 1, 2}, and
/// Lambda_s satisfies the minimum principle at zeros of nonnegative
/// one-variable polynomials. Fault: the image of x1^2 under
/// e^{-Delta/2} e^{Delta_k/2} is negated.
Report suite_semigroup_positivity(const Config& config, const SuiteOptions& options = {});

/// Floating-point agreement: beta moments, tensor form, Lambda_s closed
/// form, Gaussian pairing, kernel closed form, kernel bounds, Gram
/// matrices, measure moments and transforms, support hull, and the Euler
/// and Trotter rates. Fault: the kernel table gets a wrong degree-2 entry.
Report suite_numeric(const Config& config, const SuiteOptions& options = {});

const std::vector<std::string>& suite_names();
/// Dispatch by name; throws ConfigError for an unknown suite.
Report run_suite(const std::string& name, const Config& config, const SuiteOptions& options = {});

}  // namespace dunkl::harness
