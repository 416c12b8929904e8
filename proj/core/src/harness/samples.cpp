#include "dunkl/harness/samples.hpp"

#include <cstdlib>
#include <random>

namespace dunkl::harness {

namespace {

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}
  // Uniform on [0, n) by modular reduction; portable across standard libraries.
  unsigned below(unsigned n) { return static_cast<unsigned>(rng_() % n); }
  long between(long lo, long hi) { return lo + static_cast<long>(below(static_cast<unsigned>(hi - lo + 1))); }

 private:
  std::mt19937_64 rng_;
};

Polynomial random_poly(std::size_t dim, unsigned degree, Draw& draw) {
  for (;;) {
    Polynomial q(dim);
    for (const auto& m : basis_up_to(dim, degree)) {
      if (draw.below(2) == 0) continue;
      long c = draw.between(-3, 3);
      if (c != 0) q.add_term(m, Scalar(c));
    }
    // Nonconstant with a top-degree term.
    if (q.degree() == static_cast<int>(degree) && degree > 0) return q;
  }
}

Polynomial norm_squared_power(std::size_t dim, unsigned m) {
  Polynomial r(dim);
  for (std::size_t i = 0; i < dim; ++i) r += Polynomial::variable(dim, i).pow(2);
  return r.pow(m);
}

}  // namespace

std::vector<FamilyMember> nonnegative_family(std::size_t dim, const FamilySpec& spec, std::uint64_t seed) {
  if (dim == 0) throw Error("nonnegative_family: dimension must be positive");
  if (spec.max_degree < 2) throw Error("nonnegative_family: max_degree must be at least 2");
  std::vector<FamilyMember> out;
  Polynomial x1 = Polynomial::variable(dim, 0);
  Polynomial one = Polynomial::constant(dim, Scalar(1));
  auto push_fixed = [&](Polynomial p, const char* what) {
    if (out.size() < spec.count && p.degree() <= static_cast<int>(spec.max_degree))
      out.push_back({std::move(p), what});
  };
  push_fixed((x1 - one).pow(2), "fixed: (x1 - 1)^2");
  push_fixed((x1 - one).pow(2) * (x1 + one).pow(2), "fixed: (x1 - 1)^2 (x1 + 1)^2");
  if (dim >= 2) push_fixed((x1 * Polynomial::variable(dim, 1)).pow(2), "fixed: (x1 x2)^2");

  Draw draw(seed);
  const unsigned half = spec.max_degree / 2;
  for (std::size_t i = 0; out.size() < spec.count; ++i) {
    switch (i % 3) {
      case 0: {
        Polynomial q = random_poly(dim, 1 + draw.below(half), draw);
        out.push_back({q.pow(2), "square: (" + q.to_string() + ")^2"});
        break;
      }
      case 1: {
        unsigned terms = 2 + draw.below(2);
        Polynomial s(dim);
        std::string text = "sum of squares:";
        for (unsigned t = 0; t < terms; ++t) {
          Polynomial q = random_poly(dim, 1 + draw.below(half), draw);
          s += q.pow(2);
          text += " (" + q.to_string() + ")^2";
        }
        out.push_back({s, text});
        break;
      }
      default: {
        unsigned m = 1 + draw.below(half);
        Polynomial w = norm_squared_power(dim, m);
        if (m == half) {
          out.push_back({w, "|x|^" + std::to_string(2 * m)});
        } else {
          Polynomial q = random_poly(dim, 1 + draw.below(half - m), draw);
          out.push_back({q.pow(2) * w, "product: (" + q.to_string() + ")^2 |x|^" + std::to_string(2 * m)});
        }
        break;
      }
    }
  }
  return out;
}

DyadicGrid::DyadicGrid(std::size_t dim, long radius, unsigned shift) : dim_(dim), shift_(shift) {
  if (dim == 0) throw Error("DyadicGrid: dimension must be positive");
  if (radius <= 0) throw Error("DyadicGrid: radius must be positive");
  const long r = radius << shift;
  const long r2 = r * r;
  std::vector<long> a(dim, -r);
  for (;;) {
    long s = 0;
    for (long v : a) s += v * v;
    if (s <= r2) points_.insert(points_.end(), a.begin(), a.end());
    std::size_t i = 0;
    while (i < dim && a[i] == r) a[i++] = -r;
    if (i == dim) break;
    ++a[i];
  }
}

Vector DyadicGrid::point(std::size_t i) const {
  Vector v;
  mpz_class den = mpz_class(1) << shift_;
  for (std::size_t d = 0; d < dim_; ++d) v.emplace_back(mpq_class(mpz_class(numerators(i)[d]), den));
  return v;
}

unsigned default_grid_shift(std::size_t dim) {
  switch (dim) {
    case 1:
      return 8;
    case 2:
      return 4;
    case 3:
      return 2;
    default:
      return 1;
  }
}

DyadicGrid ball_grid(std::size_t dim, int shift, long radius) {
  return DyadicGrid(dim, radius, shift < 0 ? default_grid_shift(dim) : static_cast<unsigned>(shift));
}

GridEvaluator::GridEvaluator(const Polynomial& p, unsigned shift) : dim_(p.dim()), degree_(0), denominator_(1) {
  if (p.mode() != Mode::exact) throw ModeMismatch();
  if (p.is_zero()) return;
  degree_ = static_cast<unsigned>(p.degree());
  for (const auto& [m, c] : p.terms()) mpz_lcm(denominator_.get_mpz_t(), denominator_.get_mpz_t(), c.rational().get_den_mpz_t());
  for (const auto& [m, c] : p.terms()) {
    mpz_class k = c.rational().get_num() * (denominator_ / c.rational().get_den());
    k <<= shift * (degree_ - m.degree());
    std::vector<unsigned> e(dim_);
    for (std::size_t i = 0; i < dim_; ++i) e[i] = m[i];
    exponents_.push_back(std::move(e));
    coefficients_.push_back(std::move(k));
  }
  denominator_ <<= shift * degree_;
}

mpz_class GridEvaluator::scaled(const long* a) const {
  mpz_class acc = 0;
  for (std::size_t t = 0; t < coefficients_.size(); ++t) {
    long mono = 1;
    bool overflow = false;
    for (std::size_t i = 0; i < dim_ && !overflow; ++i)
      for (unsigned e = 0; e < exponents_[t][i] && !overflow; ++e) overflow = __builtin_mul_overflow(mono, a[i], &mono);
    if (!overflow) {
      if (mono >= 0)
        mpz_addmul_ui(acc.get_mpz_t(), coefficients_[t].get_mpz_t(), static_cast<unsigned long>(mono));
      else
        mpz_submul_ui(acc.get_mpz_t(), coefficients_[t].get_mpz_t(), -static_cast<unsigned long>(mono));
      continue;
    }
    mpz_class big = 1;
    for (std::size_t i = 0; i < dim_; ++i)
      for (unsigned e = 0; e < exponents_[t][i]; ++e) big *= a[i];
    acc += coefficients_[t] * big;
  }
  return acc;
}

mpq_class GridEvaluator::value(const long* a) const {
  mpq_class v(scaled(a), denominator_);
  v.canonicalize();
  return v;
}

GridScan scan_grid(const Polynomial& p, const DyadicGrid& grid) {
  if (p.dim() != grid.dim()) throw DimensionMismatch("scan_grid: dimension differs from the grid");
  GridEvaluator ev(p, grid.shift());
  GridScan out;
  out.points = grid.size();
  mpz_class best;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    mpz_class s = ev.scaled(grid.numerators(i));
    if (i == 0 || s < best) {
      best = s;
      out.argmin = i;
    }
  }
  out.min_value = out.points ? ev.value(grid.numerators(out.argmin)) : mpq_class(0);
  out.nonnegative = out.min_value >= 0;
  return out;
}

}  // namespace dunkl::harness
