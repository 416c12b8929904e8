#include "dunkl/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <mutex>
#include <ostream>

#include <boost/math/special_functions/erf.hpp>

namespace dunkl {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::size_t dim) : dim_(static_cast<std::uint8_t>(dim)) {
  if (dim > kMaxVariables) throw DimensionMismatch("at most 8 variables are supported");
}

Monomial::Monomial(std::initializer_list<unsigned> exponents) : Monomial(exponents.size()) {
  std::size_t i = 0;
  for (unsigned e : exponents) set(i++, e);
}

Monomial::Monomial(std::span<const unsigned> exponents) : Monomial(exponents.size()) {
  for (std::size_t i = 0; i < exponents.size(); ++i) set(i, exponents[i]);
}

void Monomial::set(std::size_t i, unsigned e) {
  degree_ = static_cast<std::uint16_t>(degree_ - exps_[i] + e);
  exps_[i] = static_cast<std::uint16_t>(e);
}

Monomial Monomial::times(std::size_t i, unsigned e) const {
  Monomial m = *this;
  m.set(i, exps_[i] + e);
  return m;
}

Monomial Monomial::divided(std::size_t i) const {
  if (exps_[i] == 0) throw Error("monomial is not divisible by x" + std::to_string(i + 1));
  Monomial m = *this;
  m.set(i, exps_[i] - 1);
  return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
  if (dim_ != o.dim_) throw DimensionMismatch("monomial product: dimensions differ");
  Monomial m = *this;
  for (std::size_t i = 0; i < dim_; ++i) m.set(i, exps_[i] + o.exps_[i]);
  return m;
}

bool Monomial::divisible_by(const Monomial& o) const {
  for (std::size_t i = 0; i < dim_; ++i)
    if (o.exps_[i] > exps_[i]) return false;
  return true;
}

std::string Monomial::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (exps_[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += 'x' + std::to_string(i + 1);
    if (exps_[i] > 1) s += '^' + std::to_string(exps_[i]);
  }
  return s.empty() ? "1" : s;
}

bool operator<(const Monomial& a, const Monomial& b) {
  if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
  for (std::size_t i = 0; i < a.dim_; ++i)
    if (a.exps_[i] != b.exps_[i]) return a.exps_[i] > b.exps_[i];
  return false;
}

namespace {

struct BasisEntry {
  std::vector<Monomial> monomials;
  std::map<Monomial, std::size_t> index;
};

void enumerate(std::size_t dim, std::size_t pos, unsigned remaining, Monomial& cur,
               std::vector<Monomial>& out) {
  if (pos + 1 == dim) {
    cur.set(pos, remaining);
    out.push_back(cur);
    cur.set(pos, 0);
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    cur.set(pos, e);
    enumerate(dim, pos + 1, remaining - e, cur, out);
  }
  cur.set(pos, 0);
}

const BasisEntry& basis_entry(std::size_t dim, unsigned degree) {
  static std::mutex mutex;
  static std::map<std::pair<std::size_t, unsigned>, BasisEntry> cache;
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.try_emplace({dim, degree});
  if (inserted) {
    Monomial cur(dim);
    if (dim == 0) {
      if (degree == 0) it->second.monomials.push_back(cur);
    } else {
      enumerate(dim, 0, degree, cur, it->second.monomials);
    }
    for (std::size_t i = 0; i < it->second.monomials.size(); ++i)
      it->second.index.emplace(it->second.monomials[i], i);
  }
  return it->second;
}

}  // namespace

const std::vector<Monomial>& homogeneous_basis(std::size_t dim, unsigned degree) {
  return basis_entry(dim, degree).monomials;
}

std::size_t basis_index(const Monomial& m) { return basis_entry(m.dim(), m.degree()).index.at(m); }

std::vector<Monomial> basis_up_to(std::size_t dim, unsigned degree) {
  std::vector<Monomial> out;
  for (unsigned n = 0; n <= degree; ++n) {
    const auto& b = homogeneous_basis(dim, n);
    out.insert(out.end(), b.begin(), b.end());
  }
  return out;
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(std::size_t dim, Mode mode) : dim_(dim), mode_(mode) {
  if (dim > kMaxVariables) throw DimensionMismatch("at most 8 variables are supported");
}

Polynomial Polynomial::constant(std::size_t dim, const Scalar& c) {
  Polynomial p(dim, c.mode());
  p.add_term(Monomial(dim), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t dim, std::size_t i, Mode mode) {
  if (i >= dim) throw DimensionMismatch("variable index out of range");
  Polynomial p(dim, mode);
  p.add_term(Monomial(dim).times(i), Scalar::one(mode));
  return p;
}

Polynomial Polynomial::monomial(const Monomial& m, const Scalar& c) {
  Polynomial p(m.dim(), c.mode());
  p.add_term(m, c);
  return p;
}

Polynomial Polynomial::linear_form(const Vector& coefficients) {
  if (coefficients.empty()) throw DimensionMismatch("empty linear form");
  Polynomial p(coefficients.size(), coefficients.front().mode());
  for (std::size_t i = 0; i < coefficients.size(); ++i)
    p.add_term(Monomial(coefficients.size()).times(i), coefficients[i]);
  return p;
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.rbegin()->first.degree());
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar::zero(mode_) : it->second;
}

bool Polynomial::is_homogeneous() const {
  return terms_.empty() || terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
  if (m.dim() != dim_) throw DimensionMismatch("monomial dimension does not match polynomial");
  if (c.mode() != mode_) throw ModeMismatch();
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.dim_ != dim_) throw DimensionMismatch("polynomial sum: dimensions differ");
  if (o.mode_ != mode_) throw ModeMismatch();
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.dim_ != dim_) throw DimensionMismatch("polynomial difference: dimensions differ");
  if (o.mode_ != mode_) throw ModeMismatch();
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& s) {
  if (s.mode() != mode_) throw ModeMismatch();
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.dim_ != b.dim_) throw DimensionMismatch("polynomial product: dimensions differ");
  if (a.mode_ != b.mode_) throw ModeMismatch();
  Polynomial r(a.dim_, a.mode_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(dim_, Scalar::one(mode_));
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

Scalar Polynomial::evaluate(std::span<const Scalar> x) const {
  if (x.size() != dim_) throw DimensionMismatch("evaluate: point dimension differs");
  Scalar sum = Scalar::zero(mode_);
  // Powers of each coordinate, built lazily up to the largest exponent.
  std::vector<std::vector<Scalar>> powers(dim_);
  for (const auto& [m, c] : terms_) {
    Scalar t = c;
    for (std::size_t i = 0; i < dim_; ++i) {
      unsigned e = m[i];
      if (e == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(Scalar::one(mode_));
      while (pw.size() <= e) pw.push_back(pw.back() * x[i]);
      t *= pw[e];
    }
    sum += t;
  }
  return sum;
}

double Polynomial::evaluate_double(std::span<const double> x) const {
  if (x.size() != dim_) throw DimensionMismatch("evaluate: point dimension differs");
  double sum = 0;
  for (const auto& [m, c] : terms_) {
    double t = c.to_double();
    for (std::size_t i = 0; i < dim_; ++i)
      if (m[i]) t *= std::pow(x[i], static_cast<int>(m[i]));
    sum += t;
  }
  return sum;
}

Polynomial Polynomial::derivative(std::size_t i) const {
  if (i >= dim_) throw DimensionMismatch("derivative: variable index out of range");
  Polynomial r(dim_, mode_);
  for (const auto& [m, c] : terms_)
    if (m[i] > 0) r.add_term(m.divided(i), c * Scalar::integer(m[i], mode_));
  return r;
}

Polynomial Polynomial::directional_derivative(const Vector& xi) const {
  if (xi.size() != dim_) throw DimensionMismatch("directional derivative: direction dimension differs");
  Polynomial r(dim_, mode_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (xi[i].is_zero()) continue;
    r += derivative(i) * xi[i];
  }
  return r;
}

Polynomial Polynomial::homogeneous_part(unsigned n) const {
  Polynomial r(dim_, mode_);
  for (const auto& [m, c] : terms_)
    if (m.degree() == n) r.terms_.emplace(m, c);
  return r;
}

std::vector<std::pair<unsigned, Polynomial>> Polynomial::homogeneous_parts() const {
  std::vector<std::pair<unsigned, Polynomial>> parts;
  for (const auto& [m, c] : terms_) {
    if (parts.empty() || parts.back().first != m.degree())
      parts.emplace_back(m.degree(), Polynomial(dim_, mode_));
    parts.back().second.terms_.emplace_hint(parts.back().second.terms_.end(), m, c);
  }
  return parts;
}

Polynomial Polynomial::substitute(const Matrix& m) const {
  if (m.rows() != dim_ || m.cols() != dim_) throw DimensionMismatch("substitute: matrix shape differs");
  // Row i of m is the linear form replacing x_i.
  std::vector<std::vector<Polynomial>> powers(dim_);
  std::vector<Polynomial> rows;
  rows.reserve(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    Polynomial row(dim_, mode_);
    for (std::size_t j = 0; j < dim_; ++j) row.add_term(Monomial(dim_).times(j), m(i, j));
    rows.push_back(std::move(row));
  }
  Polynomial result(dim_, mode_);
  for (const auto& [mono, c] : terms_) {
    Polynomial t = constant(dim_, c);
    for (std::size_t i = 0; i < dim_; ++i) {
      unsigned e = mono[i];
      if (e == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(constant(dim_, Scalar::one(mode_)));
      while (pw.size() <= e) pw.push_back(pw.back() * rows[i]);
      t = t * pw[e];
    }
    result += t;
  }
  return result;
}

Polynomial Polynomial::as(Mode mode) const {
  Polynomial r(dim_, mode);
  for (const auto& [m, c] : terms_) r.add_term(m, c.as(mode));
  return r;
}

Polynomial Polynomial::chopped(double tol) const {
  if (mode_ == Mode::exact) return *this;
  Polynomial r(dim_, mode_);
  for (const auto& [m, c] : terms_)
    if (std::abs(c.to_double()) > tol) r.terms_.emplace(m, c);
  return r;
}

double Polynomial::max_abs_coefficient() const {
  double m = 0;
  for (const auto& [mono, c] : terms_) m = std::max(m, std::abs(c.to_double()));
  return m;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<const Monomial*, const Scalar*>> order;
  for (const auto& [m, c] : terms_) order.emplace_back(&m, &c);
  std::stable_sort(order.begin(), order.end(),
                   [](const auto& a, const auto& b) { return a.first->degree() > b.first->degree(); });
  std::string out;
  for (std::size_t idx = 0; idx < order.size(); ++idx) {
    const Monomial& m = *order[idx].first;
    const Scalar& c = *order[idx].second;
    bool negative = c.sign() < 0;
    Scalar mag = c.abs();
    std::string term;
    if (m.degree() == 0) {
      term = mag.to_string();
    } else if (mag == Scalar::one(mode_)) {
      term = m.to_string();
    } else {
      term = mag.to_string() + "*" + m.to_string();
    }
    if (idx == 0)
      out = negative ? "-" + term : term;
    else
      out += (negative ? " - " : " + ") + term;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

// ------------------------------------------------------------------ parser

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t dim, Mode mode) : s_(text), dim_(dim), mode_(mode) {}

  Polynomial run() {
    skip();
    if (at_end()) throw Error("empty polynomial");
    Polynomial result = expression();
    if (!at_end()) fail(std::string("unexpected character '") + peek() + "'");
    return result;
  }

 private:
  // expression := sign* product (('+' | '-') sign* product)*
  Polynomial expression() {
    Polynomial result(dim_, mode_);
    bool first = true;
    while (true) {
      skip();
      bool negative = false;
      bool had_sign = false;
      while (!at_end() && (peek() == '+' || peek() == '-')) {
        negative ^= (peek() == '-');
        had_sign = true;
        ++pos_;
        skip();
      }
      if (!first && !had_sign) return result;
      Polynomial p = product();
      result += negative ? -p : p;
      first = false;
      skip();
      if (at_end() || (peek() != '+' && peek() != '-')) return result;
    }
  }

  // product := power ('*' power)*
  Polynomial product() {
    Polynomial result = power();
    skip();
    while (!at_end() && peek() == '*') {
      ++pos_;
      result = result * power();
      skip();
    }
    return result;
  }

  // power := atom ('^' integer)?
  Polynomial power() {
    Polynomial base = atom();
    skip();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip();
      base = base.pow(static_cast<unsigned>(integer()));
    }
    return base;
  }

  // atom := number | variable | '(' expression ')'
  Polynomial atom() {
    skip();
    if (at_end()) fail("unexpected end of input");
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return Polynomial::constant(dim_, number());
    if (c == '(') {
      ++pos_;
      Polynomial inner = expression();
      skip();
      if (at_end() || peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == 'x') {
      ++pos_;
      std::size_t var = 0;
      if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        std::size_t v = integer();
        if (v == 0 || v > dim_) fail("variable index out of range");
        var = v - 1;
      } else if (dim_ != 1) {
        fail("bare 'x' is only allowed in one variable");
      }
      return Polynomial::variable(dim_, var, mode_);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  Scalar number() {
    std::size_t start = pos_;
    auto decimal = [&] {
      while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.')) ++pos_;
      if (!at_end() && (peek() == 'e' || peek() == 'E')) {
        ++pos_;
        if (!at_end() && (peek() == '+' || peek() == '-')) ++pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      }
    };
    decimal();
    skip();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip();
      decimal();
    }
    return Scalar::parse(s_.substr(start, pos_ - start), mode_);
  }

  std::size_t integer() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return std::stoul(std::string(s_.substr(start, pos_ - start)));
  }

  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error("polynomial parse error at offset " + std::to_string(pos_) + ": " + what + " in '" +
                std::string(s_) + "'");
  }

  std::string_view s_;
  std::size_t dim_;
  Mode mode_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text, std::size_t dim, Mode mode) {
  return Parser(text, dim, mode).run();
}

// ------------------------------------------------------ module operations

Polynomial linear_substitute(const Polynomial& p, const Matrix& g) {
  if (!is_orthogonal(g)) throw Error("linear_substitute: matrix is not orthogonal");
  // g^{-1} = g^T for orthogonal g.
  return p.substitute(g.transpose());
}

Division divide_by_linear(const Polynomial& p, const Vector& a) {
  if (a.size() != p.dim()) throw DimensionMismatch("divide_by_linear: dimensions differ");
  std::size_t pivot = a.size();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero()) {
      pivot = i;
      break;
    }
  if (pivot == a.size()) throw Error("division by the zero linear form");
  const Mode mode = p.mode();
  const Scalar inv = a[pivot].inverse();

  Polynomial quotient(p.dim(), mode);
  Polynomial rem = p;
  int top = 0;
  for (const auto& [m, c] : rem.terms()) top = std::max(top, static_cast<int>(m[pivot]));
  // Each pass clears pivot exponent e and only creates terms of exponent e-1.
  for (int e = top; e >= 1; --e) {
    std::vector<std::pair<Monomial, Scalar>> level;
    for (const auto& [m, c] : rem.terms())
      if (static_cast<int>(m[pivot]) == e) level.emplace_back(m, c);
    for (const auto& [m, c] : level) {
      Monomial qm = m.divided(pivot);
      Scalar qc = c * inv;
      quotient.add_term(qm, qc);
      for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero()) rem.add_term(qm.times(i), -(qc * a[i]));
    }
  }
  return {std::move(quotient), std::move(rem)};
}

Polynomial exact_divide_by_linear(const Polynomial& p, const Vector& a, double float_tol) {
  Division d = divide_by_linear(p, a);
  if (p.mode() == Mode::exact) {
    if (!d.remainder.is_zero())
      throw DivisionRemainder("nonzero remainder dividing " + p.to_string() + " by linear form " +
                              to_string(a));
  } else {
    double scale = std::max(1.0, p.max_abs_coefficient());
    if (d.remainder.max_abs_coefficient() > float_tol * scale)
      throw DivisionRemainder("nonzero remainder dividing by linear form " + to_string(a));
  }
  return d.quotient;
}

namespace {

double radical_inverse(std::size_t index, unsigned base) {
  double result = 0;
  double f = 1.0 / base;
  while (index > 0) {
    result += f * static_cast<double>(index % base);
    index /= base;
    f /= base;
  }
  return result;
}

constexpr unsigned kPrimes[kMaxVariables] = {2, 3, 5, 7, 11, 13, 17, 19};

}  // namespace

double ar_norm_estimate(const Polynomial& p, double r, std::size_t samples) {
  if (!(r > 0)) throw Error("ar_norm_estimate: radius must be positive");
  if (samples == 0) throw Error("ar_norm_estimate: need at least one sample");
  const std::size_t dim = p.dim();
  double total = 0;
  for (const auto& [n, part] : p.homogeneous_parts()) {
    if (n == 0) {
      total += std::abs(part.terms().begin()->second.to_double());
      continue;
    }
    double best = 0;
    std::vector<double> u(dim);
    for (std::size_t s = 0; s < samples; ++s) {
      if (dim == 1) {
        u[0] = (s % 2 == 0) ? 1.0 : -1.0;
      } else {
        // Halton point pushed through the normal quantile, then normalized.
        double len = 0;
        for (std::size_t i = 0; i < dim; ++i) {
          double h = radical_inverse(s + 1, kPrimes[i]);
          u[i] = std::sqrt(2.0) * boost::math::erf_inv(2.0 * h - 1.0);
          len += u[i] * u[i];
        }
        len = std::sqrt(len);
        if (len == 0) continue;
        for (auto& v : u) v /= len;
      }
      best = std::max(best, std::abs(part.evaluate_double(u)));
    }
    total += best * std::pow(r, static_cast<double>(n));
  }
  return total;
}

}  // namespace dunkl
