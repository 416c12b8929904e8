#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace dunkl {

/// Arithmetic backend of a computation. Exact rationals are the default;
/// floating mode exists for quadrature and non-crystallographic groups.
enum class Mode { exact, floating };

std::string to_string(Mode mode);
Mode parse_mode(std::string_view text);

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ModeMismatch : public Error {
 public:
  ModeMismatch() : Error("scalar modes differ (exact vs floating)") {}
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A coefficient: arbitrary-precision rational in exact mode, IEEE double in
/// floating mode. Binary operations on scalars of different modes throw.
class Scalar {
 public:
  Scalar() : value_(mpq_class(0)) {}
  Scalar(int n) : value_(mpq_class(n)) {}  // NOLINT: integer literals are exact
  Scalar(long n) : value_(mpq_class(n)) {}  // NOLINT
  explicit Scalar(mpq_class q) : value_(std::move(q)) { std::get<mpq_class>(value_).canonicalize(); }
  explicit Scalar(double d) : value_(d) {}

  static Scalar rational(long num, long den);
  static Scalar integer(long n, Mode mode);
  static Scalar zero(Mode mode) { return integer(0, mode); }
  static Scalar one(Mode mode) { return integer(1, mode); }
  /// Parses "p/q", integers and decimals ("2.5", "1e-3"); decimals become
  /// exact rationals in exact mode.
  static Scalar parse(std::string_view text, Mode mode);

  Mode mode() const { return value_.index() == 0 ? Mode::exact : Mode::floating; }
  bool is_exact() const { return value_.index() == 0; }
  const mpq_class& rational() const;
  double to_double() const;
  /// Converts to `mode`; exact -> floating rounds, floating -> exact is exact
  /// (every double is a dyadic rational).
  Scalar as(Mode mode) const;

  bool is_zero() const;
  int sign() const;
  Scalar abs() const;
  Scalar inverse() const;
  Scalar pow(unsigned e) const;

  std::string to_string() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend std::partial_ordering operator<=>(const Scalar& a, const Scalar& b);

 private:
  std::variant<mpq_class, double> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

Scalar factorial(unsigned n, Mode mode);

}  // namespace dunkl
