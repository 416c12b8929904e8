#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace dunkl::harness {

/// What the expected value of a check rests on.
namespace provenance {
inline constexpr const char* identity = "exact identity";
inline constexpr const char* theorem = "theorem";
inline constexpr const char* closed_form = "closed form";
inline constexpr const char* oracle = "independent oracle";
inline constexpr const char* bound = "bound";
inline constexpr const char* rate = "convergence rate";
inline constexpr const char* construction = "construction";
inline constexpr const char* fault = "injected fault";
}  // namespace provenance

struct Check {
  std::string name;
  nlohmann::json inputs = nlohmann::json::object();
  std::string expected_provenance;
  std::optional<std::string> residual;  // exact residual or witness
  std::optional<double> margin;         // >= 0 means within tolerance
  bool pass = false;
  nlohmann::json detail;  // omitted when null
};

struct Report {
  std::string suite;
  std::vector<Check> checks;
  double wall_ms = 0;

  /// True iff there is at least one check and all of them pass.
  bool pass() const;
  std::size_t failures() const;
  Check& add(Check c);
  void append(const Report& other);

  /// {suite, checks: [...], pass, wall_ms}.
  nlohmann::json to_json() const;
  std::string dump() const;
};

}  // namespace dunkl::harness
