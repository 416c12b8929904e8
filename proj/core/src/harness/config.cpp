#include "dunkl/harness/config.hpp"

#include <fstream>
#include <set>

namespace dunkl::harness {

using nlohmann::json;

namespace {

template <typename T>
T get_number(const json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  const json& v = j.at(key);
  if constexpr (std::is_floating_point_v<T>) {
    if (!v.is_number()) throw ConfigError(std::string("'") + key + "' must be a number");
  } else {
    if (!v.is_number_integer() || v.get<long long>() < 0)
      throw ConfigError(std::string("'") + key + "' must be a nonnegative integer");
  }
  return v.get<T>();
}

void reject_unknown(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [key, value] : j.items())
    if (!allowed.count(key)) throw ConfigError("unknown key '" + key + "' in " + where);
}

std::string scalar_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  if (j.is_number()) return j.dump();
  throw ConfigError("expected a rational (string or number), got " + j.dump());
}

}  // namespace

Scalar scalar_from_json(const json& j, Mode mode) {
  std::string text = scalar_text(j);
  try {
    return Scalar::parse(text, mode);
  } catch (const Error& e) {
    throw ConfigError("bad rational '" + text + "': " + e.what());
  }
}

Config Config::parse(const json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  reject_unknown(j, {"group", "multiplicity", "mode", "n_max", "seed", "quad_spec", "family", "grid_shift"}, "config");
  Config c;
  if (!j.contains("group") || !j.at("group").is_object()) throw ConfigError("config needs a 'group' object");
  c.group = j.at("group");
  reject_unknown(c.group, {"preset", "N", "m", "positive_roots"}, "group");
  if (c.group.contains("preset") == c.group.contains("positive_roots"))
    throw ConfigError("group needs exactly one of 'preset' and 'positive_roots'");

  if (!j.contains("multiplicity") || !j.at("multiplicity").is_object())
    throw ConfigError("config needs a 'multiplicity' object");
  const json& mult = j.at("multiplicity");
  reject_unknown(mult, {"orbit_values"}, "multiplicity");
  if (!mult.contains("orbit_values") || !mult.at("orbit_values").is_array())
    throw ConfigError("multiplicity needs an 'orbit_values' array");
  for (const auto& v : mult.at("orbit_values")) c.orbit_values.push_back(scalar_text(v));

  if (j.contains("mode")) {
    if (!j.at("mode").is_string()) throw ConfigError("'mode' must be a string");
    try {
      c.mode = parse_mode(j.at("mode").get<std::string>());
    } catch (const Error& e) {
      throw ConfigError(e.what());
    }
  }
  c.n_max = get_number<unsigned>(j, "n_max", c.n_max);
  c.seed = get_number<std::uint64_t>(j, "seed", c.seed);
  if (j.contains("quad_spec")) {
    const json& q = j.at("quad_spec");
    if (!q.is_object()) throw ConfigError("'quad_spec' must be an object");
    reject_unknown(q, {"nodes_per_axis", "radius_cutoff", "tolerance", "points_per_panel"}, "quad_spec");
    c.quad.nodes_per_axis = get_number<std::size_t>(q, "nodes_per_axis", c.quad.nodes_per_axis);
    c.quad.radius_cutoff = get_number<double>(q, "radius_cutoff", c.quad.radius_cutoff);
    c.quad.tolerance = get_number<double>(q, "tolerance", c.quad.tolerance);
    c.quad.points_per_panel = get_number<std::size_t>(q, "points_per_panel", c.quad.points_per_panel);
    if (c.quad.points_per_panel == 0 || c.quad.nodes_per_axis < 2 * c.quad.points_per_panel)
      throw ConfigError("quad_spec: nodes_per_axis must be at least 2 * points_per_panel");
    if (!(c.quad.radius_cutoff > 0) || !(c.quad.tolerance > 0))
      throw ConfigError("quad_spec: radius_cutoff and tolerance must be positive");
  }
  if (j.contains("family")) {
    const json& f = j.at("family");
    if (!f.is_object()) throw ConfigError("'family' must be an object");
    reject_unknown(f, {"count", "max_degree"}, "family");
    c.family.count = get_number<std::size_t>(f, "count", c.family.count);
    c.family.max_degree = get_number<unsigned>(f, "max_degree", c.family.max_degree);
  }
  if (j.contains("grid_shift")) {
    c.grid_shift = static_cast<int>(get_number<unsigned>(j, "grid_shift", 0));
    if (c.grid_shift > 16) throw ConfigError("'grid_shift' must be at most 16");
  }
  // Validate the group and multiplicities eagerly.
  c.multiplicities();
  return c;
}

Config Config::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError("malformed JSON in '" + path + "': " + e.what());
  }
  return parse(j);
}

json Config::to_json() const {
  json j;
  j["group"] = group;
  j["multiplicity"] = {{"orbit_values", orbit_values}};
  j["mode"] = mode == Mode::exact ? "exact" : "float";
  j["n_max"] = n_max;
  j["seed"] = seed;
  j["quad_spec"] = {{"nodes_per_axis", quad.nodes_per_axis},
                    {"radius_cutoff", quad.radius_cutoff},
                    {"tolerance", quad.tolerance},
                    {"points_per_panel", quad.points_per_panel}};
  j["family"] = {{"count", family.count}, {"max_degree", family.max_degree}};
  if (grid_shift >= 0) j["grid_shift"] = grid_shift;
  return j;
}

RootSystem Config::root_system() const {
  try {
    if (group.contains("preset")) {
      if (!group.at("preset").is_string()) throw ConfigError("'preset' must be a string");
      std::string name = group.at("preset").get<std::string>();
      std::size_t n = get_number<std::size_t>(group, "N", 0);
      unsigned m = get_number<unsigned>(group, "m", 0);
      if (name == "I2" ? m == 0 : n == 0) throw ConfigError("preset " + name + " needs " + (name == "I2" ? "'m'" : "'N'"));
      return builtin_preset(name, n, m, mode);
    }
    const json& rows = group.at("positive_roots");
    if (!rows.is_array() || rows.empty()) throw ConfigError("'positive_roots' must be a nonempty array");
    std::vector<Vector> roots;
    for (const auto& row : rows) {
      if (!row.is_array()) throw ConfigError("each positive root must be an array");
      Vector v;
      for (const auto& c : row) v.push_back(scalar_from_json(c, mode));
      roots.push_back(std::move(v));
    }
    RootSystem rs = RootSystem::from_positive_roots(std::move(roots));
    rs.set_label("custom");
    return rs;
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(std::string("group: ") + e.what());
  }
}

std::vector<Scalar> Config::multiplicities() const {
  RootSystem rs = root_system();
  if (orbit_values.size() != rs.orbit_count())
    throw ConfigError("multiplicity: " + std::to_string(rs.orbit_count()) + " orbit value(s) expected, got " +
                      std::to_string(orbit_values.size()));
  std::vector<Scalar> k;
  for (const auto& text : orbit_values) k.push_back(scalar_from_json(json(text), mode));
  return k;
}

DunklParams Config::params() const {
  try {
    return DunklParams::make(root_system(), multiplicities(), n_max);
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
}

}  // namespace dunkl::harness
