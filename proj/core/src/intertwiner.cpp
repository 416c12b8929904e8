#include "dunkl/intertwiner.hpp"

#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace dunkl {

SingularMultiplicity::SingularMultiplicity(unsigned degree, const std::string& detail)
    : Error("singular multiplicity at degree " + std::to_string(degree) + ": " + detail), degree_(degree) {}

IntertwinerTable::IntertwinerTable(DunklParams params, std::vector<Matrix> blocks)
    : params_(std::move(params)), blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw Error("intertwiner table needs at least degree 0");
  for (unsigned n = 0; n < blocks_.size(); ++n) {
    std::size_t d = homogeneous_basis(dim(), n).size();
    if (blocks_[n].rows() != d || blocks_[n].cols() != d)
      throw DimensionMismatch("intertwiner block " + std::to_string(n) + " has the wrong shape");
    if (blocks_[n].mode() != mode()) throw ModeMismatch();
  }
}

const Matrix& IntertwinerTable::block(unsigned degree) const {
  if (degree >= blocks_.size())
    throw Error("degree " + std::to_string(degree) + " exceeds the table (n_max = " + std::to_string(n_max()) + ")");
  return blocks_[degree];
}

Polynomial IntertwinerTable::image(const Monomial& nu) const {
  if (nu.dim() != dim()) throw DimensionMismatch("monomial dimension differs from the table");
  const Matrix& b = block(nu.degree());
  const auto& basis = homogeneous_basis(dim(), nu.degree());
  std::size_t col = basis_index(nu);
  Polynomial out(dim(), mode());
  for (std::size_t r = 0; r < basis.size(); ++r) out.add_term(basis[r], b(r, col));
  return out;
}

IntertwinerTable IntertwinerTable::with_entry(unsigned degree, std::size_t row, std::size_t col,
                                              const Scalar& value) const {
  IntertwinerTable copy = *this;
  Matrix& b = copy.blocks_.at(degree);
  if (row >= b.rows() || col >= b.cols()) throw Error("with_entry: index out of range");
  b(row, col) = value;
  return copy;
}

nlohmann::json IntertwinerTable::to_json() const {
  nlohmann::json j;
  const RootSystem& rs = params_.roots;
  j["group"] = rs.label().empty() ? "custom" : rs.label();
  nlohmann::json roots = nlohmann::json::array();
  for (const auto& r : rs.roots()) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& c : r) row.push_back(c.to_string());
    roots.push_back(row);
  }
  j["roots"] = roots;
  nlohmann::json k = nlohmann::json::array();
  for (const auto& v : params_.k.orbit_values()) k.push_back(v.to_string());
  j["k"] = k;
  j["mode"] = to_string(mode());
  j["dimension"] = dim();
  j["n_max"] = n_max();
  nlohmann::json degrees = nlohmann::json::object();
  for (unsigned n = 0; n < blocks_.size(); ++n) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < blocks_[n].rows(); ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t c = 0; c < blocks_[n].cols(); ++c) row.push_back(blocks_[n](r, c).to_string());
      rows.push_back(row);
    }
    degrees[std::to_string(n)] = rows;
  }
  j["degrees"] = degrees;
  return j;
}

IntertwinerTable IntertwinerTable::from_json(const nlohmann::json& j) {
  try {
    Mode mode = parse_mode(j.at("mode").get<std::string>());
    std::vector<Vector> roots;
    for (const auto& row : j.at("roots")) {
      Vector v;
      for (const auto& c : row) v.push_back(Scalar::parse(c.get<std::string>(), mode));
      roots.push_back(std::move(v));
    }
    RootSystem rs = RootSystem::from_positive_roots(std::move(roots));
    rs.set_label(j.value("group", std::string()));
    std::vector<Scalar> k;
    for (const auto& v : j.at("k")) k.push_back(Scalar::parse(v.get<std::string>(), mode));
    unsigned n_max = j.at("n_max").get<unsigned>();
    DunklParams params = DunklParams::make(std::move(rs), std::move(k), n_max);
    std::vector<Matrix> blocks;
    const auto& degrees = j.at("degrees");
    for (unsigned n = 0; n <= n_max; ++n) {
      const auto& rows = degrees.at(std::to_string(n));
      std::size_t d = rows.size();
      Matrix b(d, d, mode);
      for (std::size_t r = 0; r < d; ++r) {
        if (rows[r].size() != d) throw Error("intertwiner block " + std::to_string(n) + " is not square");
        for (std::size_t c = 0; c < d; ++c) b(r, c) = Scalar::parse(rows[r][c].get<std::string>(), mode);
      }
      blocks.push_back(std::move(b));
    }
    return IntertwinerTable(std::move(params), std::move(blocks));
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed intertwiner table: ") + e.what());
  }
}

bool operator==(const IntertwinerTable& a, const IntertwinerTable& b) {
  if (a.blocks_.size() != b.blocks_.size() || a.params_.k.orbit_values() != b.params_.k.orbit_values() ||
      a.params_.roots.roots() != b.params_.roots.roots())
    return false;
  for (std::size_t n = 0; n < a.blocks_.size(); ++n)
    if (!(a.blocks_[n] == b.blocks_[n])) return false;
  return true;
}

// ------------------------------------------------------------------ builder

IntertwinerTable build_vk(const DunklOperators& ops, unsigned n_max) {
  const std::size_t dim = ops.dim();
  const Mode mode = ops.mode();
  const double tol = 1e-9;
  std::vector<Matrix> blocks;
  blocks.push_back(Matrix::identity(1, mode));

  for (unsigned n = 1; n <= n_max; ++n) {
    const auto& upper = homogeneous_basis(dim, n);
    const auto& lower = homogeneous_basis(dim, n - 1);
    const std::size_t du = upper.size();
    const std::size_t dl = lower.size();
    const Matrix& prev = blocks.back();

    Matrix a(dim * dl, du, mode);
    Matrix rhs(dim * dl, du, mode);
    for (std::size_t j = 0; j < du; ++j) {
      const Monomial& nu = upper[j];
      for (std::size_t i = 0; i < dim; ++i) {
        for (const auto& [m, c] : ops.dunkl(i).image(nu).terms()) a(i * dl + basis_index(m), j) = c;
        if (nu[i] == 0) continue;
        Scalar weight = Scalar::integer(nu[i], mode);
        std::size_t col = basis_index(nu.divided(i));
        for (std::size_t r = 0; r < dl; ++r) rhs(i * dl + r, j) = weight * prev(r, col);
      }
    }

    LinearSolve s = solve_linear(a, rhs, tol);
    if (s.rank < du)
      throw SingularMultiplicity(n, "intertwining system has rank " + std::to_string(s.rank) + " < " +
                                        std::to_string(du));
    if (!s.consistent) throw SingularMultiplicity(n, "intertwining system is inconsistent");
    if (!(a * s.solution).approx_equal(rhs, tol))
      throw Error("intertwining solve at degree " + std::to_string(n) + " left a nonzero residual");
    blocks.push_back(std::move(s.solution));
  }
  return IntertwinerTable(ops.params(), std::move(blocks));
}

IntertwinerTable build_vk(const DunklParams& params) { return build_vk(DunklOperators(params), params.n_max); }

Polynomial vk_apply(const IntertwinerTable& table, const Polynomial& p) {
  if (p.dim() != table.dim()) throw DimensionMismatch("polynomial dimension differs from the table");
  if (p.mode() != table.mode()) throw ModeMismatch();
  if (p.degree() > static_cast<int>(table.n_max()))
    throw Error("degree " + std::to_string(p.degree()) + " exceeds the table (n_max = " +
                std::to_string(table.n_max()) + ")");
  Polynomial out(p.dim(), p.mode());
  for (const auto& [m, c] : p.terms()) out += table.image(m) * c;
  return out;
}

PolyOperator vk_operator(const IntertwinerTable& table) {
  return PolyOperator(
      table.dim(), table.mode(), 0, [table](const Monomial& m) { return table.image(m); }, "V_k");
}

Polynomial intertwining_residual(const DunklOperators& ops, const IntertwinerTable& table, const Monomial& nu,
                                 std::size_t i) {
  Polynomial lhs = ops.dunkl(i).apply(table.image(nu));
  if (nu[i] == 0) return lhs;
  return lhs - table.image(nu.divided(i)) * Scalar::integer(nu[i], table.mode());
}

Polynomial moment_function(const IntertwinerTable& table, const Monomial& nu) { return table.image(nu); }

// ------------------------------------------------------------------ rank one

double beta_constant(double k) {
  if (!(k > 0)) throw Error("beta_constant: k must be positive");
  return std::exp(std::lgamma(k + 0.5) - std::lgamma(0.5) - std::lgamma(k));
}

Scalar beta_moment_exact(const Scalar& k, unsigned n) {
  const Mode mode = k.mode();
  if (k.sign() < 0) throw Error("beta_moment_exact: k must be nonnegative");
  const unsigned steps = (n + 1) / 2;
  Scalar half = Scalar::integer(1, mode) / Scalar::integer(2, mode);
  Scalar b = Scalar::one(mode);
  for (unsigned j = 0; j < steps; ++j) {
    Scalar jj = Scalar::integer(j, mode);
    b *= (half + jj) / (k + half + jj);
  }
  return b;
}

double beta_moment_quadrature(double k, unsigned n, double rel_tol) {
  if (!(k > 0)) throw Error("beta_moment_quadrature: k must be positive");
  using Rule = boost::math::quadrature::gauss_kronrod<double, 31>;
  const double e = static_cast<double>(n);
  // Right half. For k >= 1, t = 1 - u^2: dt = 2u du, (1 - t)^{k-1} = u^{2k-2}.
  // For k < 1, t = 1 - w^{1/k} absorbs the singular factor: (1 - t)^{k-1} dt = dw / k.
  auto right = [&](double u) {
    if (k < 1) {
      double t = 1 - std::pow(u, 1 / k);
      return std::pow(t, e) * std::pow(1 + t, k) / k;
    }
    double t = 1 - u * u;
    return 2 * std::pow(t, e) * std::pow(u, 2 * k - 1) * std::pow(2 - u * u, k);
  };
  // t = v^2 - 1 on [-1, 0]: dt = 2v dv, (1 + t)^k = v^{2k}.
  auto left = [&](double v) {
    double t = v * v - 1;
    return 2 * std::pow(t, e) * std::pow(v, 2 * k + 1) * std::pow(2 - v * v, k - 1);
  };
  double integral = Rule::integrate(right, 0.0, 1.0, 25, rel_tol) + Rule::integrate(left, 0.0, 1.0, 25, rel_tol);
  return beta_constant(k) * integral;
}

Polynomial vk_1d_closed(const Scalar& k, const Polynomial& p, BetaRoute route) {
  if (p.dim() != 1) throw DimensionMismatch("vk_1d_closed is one-dimensional");
  if (k.sign() <= 0) throw Error("vk_1d_closed: k must be positive");
  if (route == BetaRoute::quadrature) {
    Polynomial out(1, Mode::floating);
    for (const auto& [m, c] : p.terms())
      out.add_term(m, Scalar(c.to_double() * beta_moment_quadrature(k.to_double(), m[0])));
    return out;
  }
  Polynomial out(1, p.mode());
  Scalar kx = k.as(p.mode());
  for (const auto& [m, c] : p.terms()) out.add_term(m, c * beta_moment_exact(kx, m[0]));
  return out;
}

Scalar vk_z2n_tensor(const std::vector<Scalar>& k, const Monomial& nu) {
  if (k.size() != nu.dim()) throw DimensionMismatch("one multiplicity per coordinate is required");
  Scalar c = Scalar::one(k.front().mode());
  for (std::size_t i = 0; i < k.size(); ++i) c *= beta_moment_exact(k[i], nu[i]);
  return c;
}

std::vector<Scalar> z2n_multiplicities(const DunklParams& params) {
  const RootSystem& rs = params.roots;
  const std::size_t n = rs.dim();
  if (rs.size() != n) throw Error("group is not Z2^N");
  std::vector<Scalar> k(n);
  std::vector<bool> seen(n, false);
  for (std::size_t r = 0; r < rs.size(); ++r) {
    std::size_t axis = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (rs.root(r)[i].is_zero()) continue;
      if (axis != n) throw Error("group is not Z2^N");
      axis = i;
    }
    if (axis == n || seen[axis]) throw Error("group is not Z2^N");
    seen[axis] = true;
    k[axis] = params.k(r);
  }
  return k;
}

Scalar vk_z2n_tensor(const DunklParams& params, const Monomial& nu) {
  return vk_z2n_tensor(z2n_multiplicities(params), nu);
}

}  // namespace dunkl
