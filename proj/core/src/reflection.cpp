#include "dunkl/reflection.hpp"

#include <cmath>
#include <deque>
#include <map>
#include <numbers>
#include <numeric>

namespace dunkl {

Vector reflect(const Vector& root, const Vector& x) {
  Scalar len2 = norm_squared(root);
  if (len2.is_zero()) throw Error("reflect: zero root");
  Scalar f = Scalar::integer(2, len2.mode()) * dot(root, x) / len2;
  return x - f * root;
}

namespace {

// True when a and b are parallel (b = c a for some c != 0).
bool parallel(const Vector& a, const Vector& b, double tol) {
  Scalar ab = dot(a, b);
  Scalar lhs = ab * ab;
  Scalar rhs = norm_squared(a) * norm_squared(b);
  if (lhs.is_exact()) return lhs == rhs;
  return std::abs(lhs.to_double() - rhs.to_double()) <= tol * std::max(1.0, rhs.to_double());
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

RootSystem RootSystem::from_positive_roots(std::vector<Vector> roots, double float_tol) {
  if (roots.empty()) throw Error("root system needs at least one root");
  RootSystem rs;
  rs.dim_ = roots.front().size();
  if (rs.dim_ == 0) throw Error("root vectors must be nonempty");
  rs.mode_ = roots.front().front().mode();
  rs.tol_ = float_tol;
  for (const auto& r : roots) {
    if (r.size() != rs.dim_) throw DimensionMismatch("roots have different dimensions");
    for (const auto& c : r)
      if (c.mode() != rs.mode_) throw ModeMismatch();
    Scalar len2 = norm_squared(r);
    bool zero = len2.is_exact() ? len2.is_zero() : len2.to_double() <= float_tol;
    if (zero) throw Error("zero root");
    rs.squared_lengths_.push_back(len2);
  }
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      if (parallel(roots[i], roots[j], float_tol))
        throw Error("roots " + to_string(roots[i]) + " and " + to_string(roots[j]) + " are parallel");
  rs.roots_ = std::move(roots);

  UnionFind uf(rs.roots_.size());
  for (std::size_t a = 0; a < rs.roots_.size(); ++a)
    for (std::size_t b = 0; b < rs.roots_.size(); ++b) {
      Vector image = reflect(rs.roots_[a], rs.roots_[b]);
      auto hit = rs.find(image);
      if (!hit)
        throw Error("root set is not closed: reflecting " + to_string(rs.roots_[b]) + " in " +
                    to_string(rs.roots_[a]) + " gives " + to_string(image));
      uf.unite(b, *hit);
    }
  std::map<std::size_t, std::size_t> orbit_id;
  rs.orbit_of_.resize(rs.roots_.size());
  for (std::size_t i = 0; i < rs.roots_.size(); ++i) {
    auto [it, inserted] = orbit_id.try_emplace(uf.find(i), rs.orbits_.size());
    if (inserted) rs.orbits_.emplace_back();
    rs.orbits_[it->second].push_back(i);
    rs.orbit_of_[i] = it->second;
  }
  return rs;
}

std::optional<std::size_t> RootSystem::find(const Vector& v) const {
  if (v.size() != dim_) return std::nullopt;
  for (std::size_t i = 0; i < roots_.size(); ++i)
    if (parallel(roots_[i], v, tol_)) return i;
  return std::nullopt;
}

namespace {

std::string element_key(const Matrix& g) {
  std::string key;
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) {
      const Scalar& x = g(i, j);
      if (x.is_exact()) {
        key += x.to_string();
      } else {
        long long v = std::llround(x.to_double() * 1e8);
        key += std::to_string(v == 0 ? 0LL : v);  // folds -0
      }
      key += ',';
    }
  return key;
}

}  // namespace

ReflectionGroup build_group(const RootSystem& roots, std::size_t bound) {
  ReflectionGroup g;
  g.dim_ = roots.dim();
  g.mode_ = roots.mode();
  for (const auto& r : roots.roots()) g.generators_.push_back(reflection_matrix(r));

  std::map<std::string, std::size_t> seen;
  auto add = [&](Matrix m) -> bool {
    std::string key = element_key(m);
    if (seen.count(key)) return false;
    if (g.elements_.size() >= bound)
      throw ClosureBoundExceeded("group closure exceeded " + std::to_string(bound) + " elements");
    seen.emplace(key, g.elements_.size());
    g.keys_.push_back(std::move(key));
    g.elements_.push_back(std::move(m));
    return true;
  };
  add(Matrix::identity(g.dim_, g.mode_));
  // Breadth-first closure: every element is reached as a word in generators.
  for (std::size_t head = 0; head < g.elements_.size(); ++head)
    for (const auto& s : g.generators_) add(s * g.elements_[head]);

  g.inverse_.resize(g.elements_.size());
  for (std::size_t i = 0; i < g.elements_.size(); ++i) {
    auto it = seen.find(element_key(g.elements_[i].transpose()));
    if (it == seen.end()) throw Error("group is not closed under inverse (non-orthogonal input?)");
    g.inverse_[i] = it->second;
  }
  return g;
}

std::optional<std::size_t> ReflectionGroup::find(const Matrix& m) const {
  std::string key = element_key(m);
  for (std::size_t i = 0; i < keys_.size(); ++i)
    if (keys_[i] == key) return i;
  return std::nullopt;
}

std::vector<std::size_t> ReflectionGroup::reflections() const {
  std::vector<std::size_t> out;
  const Matrix id = Matrix::identity(dim_, mode_);
  for (std::size_t i = 1; i < elements_.size(); ++i) {
    const Matrix& m = elements_[i];
    Scalar trace = Scalar::zero(mode_);
    for (std::size_t d = 0; d < dim_; ++d) trace += m(d, d);
    bool trace_ok = mode_ == Mode::exact
                        ? trace == Scalar::integer(static_cast<long>(dim_) - 2, mode_)
                        : std::abs(trace.to_double() - (static_cast<double>(dim_) - 2)) < 1e-8;
    if (trace_ok && (m * m).approx_equal(id, 1e-8)) out.push_back(i);
  }
  return out;
}

MultiplicityFunction::MultiplicityFunction(const RootSystem& roots, std::vector<Scalar> orbit_values)
    : orbit_values_(std::move(orbit_values)) {
  if (orbit_values_.size() != roots.orbit_count())
    throw Error("multiplicity needs " + std::to_string(roots.orbit_count()) + " orbit values, got " +
                std::to_string(orbit_values_.size()));
  gamma_ = Scalar::zero(roots.mode());
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const Scalar& v = orbit_values_[roots.orbit_of(i)];
    if (v.mode() != roots.mode()) throw ModeMismatch();
    per_root_.push_back(v);
    gamma_ += v;
  }
}

bool MultiplicityFunction::nonnegative() const {
  for (const auto& v : orbit_values_)
    if (v.sign() < 0) return false;
  return true;
}

bool MultiplicityFunction::is_zero() const {
  for (const auto& v : orbit_values_)
    if (!v.is_zero()) return false;
  return true;
}

namespace {

Vector int_vector(std::initializer_list<long> xs, std::size_t pad, Mode mode) {
  Vector v;
  for (long x : xs) v.push_back(Scalar::integer(x, mode));
  while (v.size() < pad) v.push_back(Scalar::zero(mode));
  return v;
}

Vector e_combo(std::size_t n, std::size_t i, long ci, std::size_t j, long cj, Mode mode) {
  Vector v = zero_vector(n, mode);
  v[i] = Scalar::integer(ci, mode);
  if (j < n) v[j] = Scalar::integer(cj, mode);
  return v;
}

}  // namespace

RootSystem builtin_preset(const std::string& name, std::size_t n, unsigned m, Mode mode) {
  std::vector<Vector> roots;
  std::string label;
  if (name == "Z2") {
    if (n < 1) throw Error("Z2^N needs N >= 1");
    for (std::size_t i = 0; i < n; ++i) roots.push_back(unit_vector(n, i, mode));
    label = n == 1 ? "Z2" : "Z2^" + std::to_string(n);
  } else if (name == "A") {
    if (n < 2) throw Error("A_{N-1} needs N >= 2");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) roots.push_back(e_combo(n, i, 1, j, -1, mode));
    label = "A" + std::to_string(n - 1);
  } else if (name == "B") {
    if (n < 1) throw Error("B_N needs N >= 1");
    for (std::size_t i = 0; i < n; ++i) roots.push_back(unit_vector(n, i, mode));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        roots.push_back(e_combo(n, i, 1, j, -1, mode));
        roots.push_back(e_combo(n, i, 1, j, 1, mode));
      }
    label = "B" + std::to_string(n);
  } else if (name == "D") {
    if (n < 2) throw Error("D_N needs N >= 2");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        roots.push_back(e_combo(n, i, 1, j, -1, mode));
        roots.push_back(e_combo(n, i, 1, j, 1, mode));
      }
    label = "D" + std::to_string(n);
  } else if (name == "I2") {
    if (m < 2) throw Error("I2(m) needs m >= 2");
    label = "I2(" + std::to_string(m) + ")";
    if (mode == Mode::exact) {
      switch (m) {
        case 2:
          roots = {int_vector({1, 0}, 2, mode), int_vector({0, 1}, 2, mode)};
          break;
        case 3:
          roots = {int_vector({1, -1, 0}, 3, mode), int_vector({1, 0, -1}, 3, mode),
                   int_vector({0, 1, -1}, 3, mode)};
          break;
        case 4:
          roots = {int_vector({1, 0}, 2, mode), int_vector({0, 1}, 2, mode), int_vector({1, -1}, 2, mode),
                   int_vector({1, 1}, 2, mode)};
          break;
        case 6:
          roots = {int_vector({1, -1, 0}, 3, mode),  int_vector({1, 0, -1}, 3, mode),
                   int_vector({0, 1, -1}, 3, mode),  int_vector({2, -1, -1}, 3, mode),
                   int_vector({1, -2, 1}, 3, mode),  int_vector({1, 1, -2}, 3, mode)};
          break;
        default:
          throw Error("I2(" + std::to_string(m) + ") has no rational realization; use float mode");
      }
    } else {
      for (unsigned j = 0; j < m; ++j) {
        double angle = std::numbers::pi * j / m;
        roots.push_back({Scalar(-std::sin(angle)), Scalar(std::cos(angle))});
      }
    }
  } else {
    throw Error("unknown preset '" + name + "' (expected Z2, A, B, D or I2)");
  }
  RootSystem rs = RootSystem::from_positive_roots(std::move(roots));
  rs.set_label(label);
  return rs;
}

}  // namespace dunkl
