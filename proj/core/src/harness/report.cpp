#include "dunkl/harness/report.hpp"

namespace dunkl::harness {

bool Report::pass() const { return !checks.empty() && failures() == 0; }

std::size_t Report::failures() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.pass ? 0 : 1;
  return n;
}

Check& Report::add(Check c) {
  checks.push_back(std::move(c));
  return checks.back();
}

void Report::append(const Report& other) {
  for (const auto& c : other.checks) checks.push_back(c);
}

nlohmann::json Report::to_json() const {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json j;
    j["name"] = c.name;
    j["inputs"] = c.inputs;
    j["expected_provenance"] = c.expected_provenance;
    if (c.residual) j["residual"] = *c.residual;
    if (c.margin) j["margin"] = *c.margin;
    j["pass"] = c.pass;
    if (!c.detail.is_null()) j["detail"] = c.detail;
    list.push_back(std::move(j));
  }
  return {{"suite", suite}, {"checks", std::move(list)}, {"pass", pass()}, {"wall_ms", wall_ms}};
}

std::string Report::dump() const { return to_json().dump(2); }

}  // namespace dunkl::harness
