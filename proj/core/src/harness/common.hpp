#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "dunkl/harness/report.hpp"
#include "dunkl/harness/samples.hpp"

namespace dunkl::harness::detail {

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline nlohmann::json scalars_json(const std::vector<Scalar>& v) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& s : v) j.push_back(s.to_string());
  return j;
}

inline std::string vector_text(const Vector& v) { return to_string(v); }

inline Check make_check(std::string name, const char* provenance, nlohmann::json inputs = nlohmann::json::object()) {
  Check c;
  c.name = std::move(name);
  c.expected_provenance = provenance;
  c.inputs = std::move(inputs);
  return c;
}

/// Records the first nonzero residual as the witness.
struct ResidualTally {
  std::size_t evaluated = 0;
  bool clean = true;
  nlohmann::json witness;

  void record(const std::string& input, const Polynomial& residual) {
    ++evaluated;
    if (clean && !residual.is_zero()) {
      clean = false;
      witness = {{"input", input}, {"residual", residual.to_string()}};
    }
  }
  void record(const std::string& input, const Scalar& residual) {
    ++evaluated;
    if (clean && !residual.is_zero()) {
      clean = false;
      witness = {{"input", input}, {"residual", residual.to_string()}};
    }
  }
  void finish(Check& c) const {
    c.inputs["evaluated"] = evaluated;
    c.pass = clean && evaluated > 0;
    c.residual = clean ? "0" : witness["residual"].get<std::string>();
    if (!clean) c.detail = {{"witness", witness}};
  }
};

inline Report finish(Report r, const Stopwatch& sw, bool timing) {
  r.wall_ms = timing ? sw.ms() : 0.0;
  return r;
}

inline Scalar half() { return Scalar::rational(1, 2); }

/// Degree-2 fault: V_k(x1^2) gets `value` as its x1^2 coefficient.
inline IntertwinerTable corrupt_table(const IntertwinerTable& t, const Scalar& value) {
  return t.with_entry(2, 0, 0, value);
}

}  // namespace dunkl::harness::detail
