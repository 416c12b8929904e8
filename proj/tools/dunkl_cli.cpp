// dunkl: command line front end for the Dunkl operator library.
//
// Exit codes: 0 all checks pass, 1 some check fails, 2 usage or config error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "dunkl/harness/samples.hpp"
#include "dunkl/harness/suites.hpp"
#include "dunkl/kernel.hpp"

using namespace dunkl;
using namespace dunkl::harness;
using nlohmann::json;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Common {
  std::string config_path;
  std::optional<unsigned> order;
  std::optional<std::uint64_t> seed;
  std::string mode;
  std::string out;
  bool no_timing = false;
};

void add_common(CLI::App* app, Common& c, bool needs_config = true) {
  auto* opt = app->add_option("--config", c.config_path, "Config JSON file");
  if (needs_config) opt->required();
  app->add_option("--order", c.order, "Degree or truncation order");
  app->add_option("--seed", c.seed, "Seed for generated samples");
  app->add_option("--mode", c.mode, "exact or float (overrides the config)");
  app->add_option("--out", c.out, "Write output here instead of stdout");
  app->add_flag("--no-timing", c.no_timing, "Report wall_ms as 0 (byte-identical reports)");
}

Config load_config(const Common& c) {
  Config cfg = Config::load(c.config_path);
  if (!c.mode.empty()) {
    json j = cfg.to_json();
    j["mode"] = c.mode;
    cfg = Config::parse(j);
  }
  if (c.seed) cfg.seed = *c.seed;
  return cfg;
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw ConfigError("cannot write '" + c.out + "'");
  f << text << "\n";
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    item.erase(0, item.find_first_not_of(' '));
    item.erase(item.find_last_not_of(' ') + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

Vector parse_point(const std::string& text, Mode mode) {
  Vector v;
  for (const auto& part : split(text, ',')) v.push_back(Scalar::parse(part, mode));
  return v;
}

// "a", "bi", "a+bi", "a-bi", "i", "-i" with rational a, b.
std::pair<Scalar, Scalar> parse_complex(std::string t, Mode mode) {
  if (t.empty()) throw ConfigError("empty complex number");
  if (t.back() != 'i') return {Scalar::parse(t, mode), Scalar::zero(mode)};
  t.pop_back();
  std::size_t split_at = std::string::npos;
  for (std::size_t i = t.size(); i-- > 1;)
    if ((t[i] == '+' || t[i] == '-') && t[i - 1] != 'e' && t[i - 1] != 'E') {
      split_at = i;
      break;
    }
  std::string re = split_at == std::string::npos ? "0" : t.substr(0, split_at);
  std::string im = split_at == std::string::npos ? t : t.substr(split_at);
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  if (im.front() == '+') im.erase(0, 1);
  return {Scalar::parse(re, mode), Scalar::parse(im, mode)};
}

ComplexVector parse_complex_point(const std::string& text, Mode mode) {
  ComplexVector z;
  for (const auto& part : split(text, ',')) {
    auto [re, im] = parse_complex(part, mode);
    z.re.push_back(re);
    z.im.push_back(im);
  }
  return z;
}

std::string scalar_out(const Scalar& s) { return s.to_string(); }

IntertwinerTable table_for(const Config& cfg, unsigned degree) {
  Config c = cfg;
  c.n_max = degree;
  return build_vk(c.params());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dunkl operators, intertwiner, kernel and verification suites"};
  app.require_subcommand(1);
  Common common;

  auto* group = app.add_subcommand("group", "Reflection group information");
  group->require_subcommand(1);
  auto* describe = group->add_subcommand("describe", "Roots, orbits and group order");
  add_common(describe, common);

  auto* vk = app.add_subcommand("vk", "Intertwining operator");
  vk->require_subcommand(1);
  auto* vk_build = vk->add_subcommand("build", "Build V_k up to --order (default n_max) and print the table");
  add_common(vk_build, common);
  auto* vk_apply_cmd = vk->add_subcommand("apply", "Apply V_k to a polynomial");
  add_common(vk_apply_cmd, common);
  std::string poly_text;
  std::string table_path;
  vk_apply_cmd->add_option("--poly", poly_text, "Polynomial, e.g. \"x1^2 - 1/2*x2\"")->required();
  vk_apply_cmd->add_option("--table", table_path, "Table JSON written by vk build");

  auto* moments = app.add_subcommand("moments", "Moment functions m_{k,nu} = V_k(x^nu) up to --order");
  add_common(moments, common);
  std::string x_text;
  moments->add_option("--x", x_text, "Evaluate at this point (comma separated)");

  auto* kernel = app.add_subcommand("kernel", "Truncated Dunkl kernel");
  kernel->require_subcommand(1);
  auto* kernel_eval_cmd = kernel->add_subcommand("eval", "K(x, y) with tail bound");
  add_common(kernel_eval_cmd, common);
  std::string y_text;
  bool bessel = false;
  kernel_eval_cmd->add_option("--x", x_text, "Real point, comma separated")->required();
  kernel_eval_cmd->add_option("--y", y_text, "Complex point, e.g. \"1/2+i,2\"")->required();
  kernel_eval_cmd->add_flag("--bessel", bessel, "Group average J instead of K");
  auto* gram = kernel->add_subcommand("gram", "Smallest eigenvalue of [K(x_i - x_j, i y)]");
  add_common(gram, common);
  std::string points_text;
  gram->add_option("--points", points_text, "Points separated by ';' or spaces, coordinates by ','")->required();
  gram->add_option("--y", y_text, "Real frequency y")->required();
  gram->add_flag("--bessel", bessel, "Use J instead of K");

  auto* pairing_cmd = app.add_subcommand("pairing", "[p, q]_k");
  add_common(pairing_cmd, common);
  std::string q_text;
  pairing_cmd->add_option("--p", poly_text, "First polynomial")->required();
  pairing_cmd->add_option("--q", q_text, "Second polynomial")->required();

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  add_common(verify, common);
  std::string suite;
  bool inject_fault = false;
  verify->add_option("suite", suite, "identities | positivity_vk | semigroup_positivity | numeric | all")->required();
  verify->add_flag("--inject-fault", inject_fault, "Negative control: corrupt the object under test");

  auto* scan = app.add_subcommand("scan", "Grid scans");
  scan->require_subcommand(1);
  auto* scan_pos = scan->add_subcommand("positivity", "V_k p >= 0 on the dyadic ball grid");
  add_common(scan_pos, common);
  scan_pos->add_option("--poly", poly_text, "Scan this polynomial instead of the nonnegative family");
  scan_pos->add_flag("--inject-fault", inject_fault, "Negative control for the family scan");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    Config cfg = load_config(common);
    SuiteOptions opts;
    opts.timing = !common.no_timing;
    opts.inject_fault = inject_fault;

    if (describe->parsed()) {
      DunklParams p = cfg.params();
      json roots = json::array();
      for (const auto& r : p.roots.roots()) {
        json row = json::array();
        for (const auto& c : r) row.push_back(c.to_string());
        roots.push_back(row);
      }
      json orbits = json::array();
      for (std::size_t o = 0; o < p.roots.orbit_count(); ++o)
        orbits.push_back({{"roots", p.roots.orbits()[o]}, {"k", cfg.orbit_values[o]}});
      json out = {{"group", p.roots.label()},
                  {"dimension", p.dim()},
                  {"order", p.group.order()},
                  {"mode", to_string(p.mode())},
                  {"positive_roots", roots},
                  {"orbits", orbits},
                  {"gamma", p.k.gamma().to_string()},
                  {"k_nonnegative", p.k.nonnegative()}};
      emit(common, out.dump(2));
      return kPass;
    }
    if (vk_build->parsed()) {
      emit(common, table_for(cfg, common.order.value_or(cfg.n_max)).to_json().dump(2));
      return kPass;
    }
    if (vk_apply_cmd->parsed()) {
      Polynomial p = Polynomial::parse(poly_text, cfg.root_system().dim(), cfg.mode);
      unsigned degree = std::max<int>(p.degree(), 0);
      IntertwinerTable t = table_path.empty() ? table_for(cfg, std::max(degree, common.order.value_or(degree)))
                                              : [&] {
                                                  std::ifstream f(table_path);
                                                  if (!f) throw ConfigError("cannot open table '" + table_path + "'");
                                                  return IntertwinerTable::from_json(json::parse(f));
                                                }();
      emit(common, vk_apply(t, p).to_string());
      return kPass;
    }
    if (moments->parsed()) {
      unsigned degree = common.order.value_or(cfg.n_max);
      IntertwinerTable t = table_for(cfg, degree);
      std::optional<Vector> x;
      if (!x_text.empty()) x = parse_point(x_text, cfg.mode);
      json list = json::array();
      for (const auto& nu : basis_up_to(t.dim(), degree)) {
        Polynomial m = moment_function(t, nu);
        json row = {{"nu", nu.to_string()}, {"moment", m.to_string()}};
        if (x) row["value"] = scalar_out(m.evaluate(*x));
        list.push_back(row);
      }
      emit(common, json{{"group", t.params().roots.label()}, {"moments", list}}.dump(2));
      return kPass;
    }
    if (kernel_eval_cmd->parsed()) {
      unsigned order = common.order.value_or(cfg.n_max);
      KernelTruncation tr(table_for(cfg, order), order);
      Vector x = parse_point(x_text, cfg.mode);
      ComplexVector y = parse_complex_point(y_text, cfg.mode);
      KernelValue v = bessel ? bessel_eval(tr, x, y) : kernel_eval(tr, x, y);
      BoundVerdict b = kernel_bound_check(tr, x, y, Monomial(tr.dim()), 1e-10, 1e300);
      json out = {{"point", {{"x", to_string(x)}, {"y", y_text}}},
                  {"value_re", v.value.real()},
                  {"value_im", v.value.imag()},
                  {"abs", std::abs(v.value)},
                  {"tail_bound", v.tail_bound},
                  {"order", v.order},
                  {"bound", b.bound},
                  {"bound_pass", b.pass}};
      if (cfg.mode == Mode::exact) out["exact"] = {{"re", v.exact.re.to_string()}, {"im", v.exact.im.to_string()}};
      emit(common, out.dump(2));
      return b.pass ? kPass : kFail;
    }
    if (gram->parsed()) {
      unsigned order = common.order.value_or(cfg.n_max);
      KernelTruncation tr(table_for(cfg, order), order);
      std::vector<Vector> pts;
      for (const auto& group : split(points_text, ';'))
        for (const auto& p : split(group, ' ')) pts.push_back(parse_point(p, cfg.mode));
      GramResult g = gram_psd_check(tr, pts, parse_point(y_text, cfg.mode), 1e-8, bessel);
      json out = {{"points", pts.size()},   {"order", order},           {"lambda_min", g.lambda_min},
                  {"tail", g.tail},         {"threshold", g.threshold}, {"pass", g.pass}};
      emit(common, out.dump(2));
      return g.pass ? kPass : kFail;
    }
    if (pairing_cmd->parsed()) {
      DunklParams params = cfg.params();
      Polynomial p = Polynomial::parse(poly_text, params.dim(), cfg.mode);
      Polynomial q = Polynomial::parse(q_text, params.dim(), cfg.mode);
      DunklOperators ops(params);
      json out = {{"p", p.to_string()}, {"q", q.to_string()}, {"value", pairing(ops, p, q).to_string()}};
      emit(common, out.dump(2));
      return kPass;
    }
    if (verify->parsed()) {
      if (common.order) {
        if (suite == "numeric")
          opts.order = common.order;
        else
          cfg.n_max = *common.order;
      }
      if (suite == "all") {
        json all = json::array();
        bool ok = true;
        for (const auto& name : suite_names()) {
          Report r = run_suite(name, cfg, opts);
          ok = ok && r.pass();
          all.push_back(r.to_json());
        }
        emit(common, json{{"reports", all}, {"pass", ok}}.dump(2));
        return ok ? kPass : kFail;
      }
      Report r = run_suite(suite, cfg, opts);
      emit(common, r.dump());
      return r.pass() ? kPass : kFail;
    }
    if (scan_pos->parsed()) {
      if (common.order) cfg.n_max = *common.order;
      if (poly_text.empty()) {
        Report r = suite_positivity_vk(cfg, opts);
        emit(common, r.dump());
        return r.pass() ? kPass : kFail;
      }
      if (cfg.mode != Mode::exact) throw ConfigError("scan positivity runs in exact mode only");
      DunklParams params = cfg.params();
      Polynomial p = Polynomial::parse(poly_text, params.dim(), Mode::exact);
      IntertwinerTable t = table_for(cfg, std::max<int>(p.degree(), 0));
      DyadicGrid grid = ball_grid(params.dim(), cfg.grid_shift);
      Polynomial v = vk_apply(t, p);
      GridScan s = scan_grid(v, grid);
      json out = {{"p", p.to_string()},
                  {"vk_p", v.to_string()},
                  {"grid_points", grid.size()},
                  {"min_value", s.min_value.get_str()},
                  {"argmin", to_string(grid.point(s.argmin))},
                  {"pass", s.nonnegative}};
      emit(common, out.dump(2));
      return s.nonnegative ? kPass : kFail;
    }
  } catch (const std::exception& e) {
    std::cerr << "dunkl: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
