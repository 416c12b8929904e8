#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dunkl/pairing.hpp"

namespace dunkl::harness {

/// Malformed or unsupported configuration (CLI exit code 2).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Nonnegative sample family: how many polynomials and their degree bound.
struct FamilySpec {
  std::size_t count = 50;
  unsigned max_degree = 6;
};

/// Run configuration.
///
///   {"group": {"preset": "B", "N": 2} | {"preset": "I2", "m": 5}
///             | {"positive_roots": [["1", "0"], ...]},
///    "multiplicity": {"orbit_values": ["1", "1/2"]},
///    "mode": "exact" | "float",
///    "n_max": 6, "seed": 1,
///    "quad_spec": {"nodes_per_axis": 160, "radius_cutoff": 10, "tolerance": 1e-10},
///    "family": {"count": 50, "max_degree": 6},
///    "grid_shift": 4}
///
/// Only "group" and "multiplicity" are required. Rational entries may be
/// strings ("5/2") or JSON numbers.
struct Config {
  nlohmann::json group;
  std::vector<std::string> orbit_values;
  Mode mode = Mode::exact;
  unsigned n_max = 6;
  std::uint64_t seed = 1;
  QuadSpec quad;
  FamilySpec family;
  int grid_shift = -1;  // dyadic grid step 2^-shift; -1 picks by dimension

  static Config parse(const nlohmann::json& j);
  static Config load(const std::string& path);
  nlohmann::json to_json() const;

  RootSystem root_system() const;
  std::vector<Scalar> multiplicities() const;
  DunklParams params() const;
};

/// Rational from a JSON string or number.
Scalar scalar_from_json(const nlohmann::json& j, Mode mode);

}  // namespace dunkl::harness
