#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "dunkl/harness/config.hpp"

namespace dunkl::harness {

struct FamilyMember {
  Polynomial p;
  std::string construction;
};

/// Nonnegative polynomials by construction (exact mode): squares q^2, sums
/// of squares, and q^2 |x|^{2m}. The first members are fixed
/// ((x1 - 1)^2, (x1 - 1)^2 (x1 + 1)^2, (x1 x2)^2 when N >= 2); the rest are
/// drawn from a mt19937_64 stream seeded with `seed`. This is a sufficient
/// subfamily of the nonnegative polynomials, not all of them.
std::vector<FamilyMember> nonnegative_family(std::size_t dim, const FamilySpec& spec, std::uint64_t seed);

/// Points a / 2^shift with integer a and |a / 2^shift| <= radius.
class DyadicGrid {
 public:
  DyadicGrid(std::size_t dim, long radius, unsigned shift);

  std::size_t dim() const { return dim_; }
  unsigned shift() const { return shift_; }
  std::size_t size() const { return points_.size() / dim_; }
  const long* numerators(std::size_t i) const { return points_.data() + i * dim_; }
  Vector point(std::size_t i) const;

 private:
  std::size_t dim_;
  unsigned shift_;
  std::vector<long> points_;
};

/// Step 2^-8 in one variable, 2^-4 in two, 2^-2 in three, 2^-1 beyond;
/// each gives more than 10^3 points in the ball of radius 2.
unsigned default_grid_shift(std::size_t dim);
DyadicGrid ball_grid(std::size_t dim, int shift = -1, long radius = 2);

/// Exact evaluation of a rational polynomial on a dyadic grid with integer
/// arithmetic: p(a / 2^s) = S(a) / (D 2^{s d}) with S(a) an integer.
class GridEvaluator {
 public:
  GridEvaluator(const Polynomial& p, unsigned shift);

  /// S(a); same sign as p(a / 2^s).
  mpz_class scaled(const long* a) const;
  mpq_class value(const long* a) const;

 private:
  std::size_t dim_;
  unsigned degree_;
  mpz_class denominator_;
  std::vector<std::vector<unsigned>> exponents_;
  std::vector<mpz_class> coefficients_;
};

struct GridScan {
  bool nonnegative = true;
  std::size_t argmin = 0;
  mpq_class min_value;
  std::size_t points = 0;
};

/// Exact minimum of p over the grid.
GridScan scan_grid(const Polynomial& p, const DyadicGrid& grid);

}  // namespace dunkl::harness
