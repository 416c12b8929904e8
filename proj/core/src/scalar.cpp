#include "dunkl/scalar.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>

namespace dunkl {

std::string to_string(Mode mode) { return mode == Mode::exact ? "exact" : "float"; }

Mode parse_mode(std::string_view text) {
  if (text == "exact") return Mode::exact;
  if (text == "float" || text == "floating") return Mode::floating;
  throw Error("unknown mode '" + std::string(text) + "' (expected exact or float)");
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw Error("zero denominator");
  return Scalar(mpq_class(num, den));
}

Scalar Scalar::integer(long n, Mode mode) {
  return mode == Mode::exact ? Scalar(mpq_class(n)) : Scalar(static_cast<double>(n));
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Exact value of a decimal literal such as -12.5e-3.
mpq_class parse_decimal(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string digits;
  long frac_len = 0;
  bool seen_point = false;
  std::size_t i = 0;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      if (seen_point) ++frac_len;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (digits.empty()) throw Error("malformed number '" + std::string(s) + "'");
  long exponent = 0;
  if (i < s.size()) {
    if (s[i] != 'e' && s[i] != 'E') throw Error("malformed number '" + std::string(s) + "'");
    std::string exp_text(s.substr(i + 1));
    std::size_t used = 0;
    try {
      exponent = std::stol(exp_text, &used);
    } catch (const std::exception&) {
      throw Error("malformed exponent in '" + std::string(s) + "'");
    }
    if (used != exp_text.size()) throw Error("malformed exponent in '" + std::string(s) + "'");
  }
  mpz_class mantissa(digits, 10);
  long shift = exponent - frac_len;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  mpq_class q = shift >= 0 ? mpq_class(mantissa * scale) : mpq_class(mantissa, scale);
  q.canonicalize();
  return negative ? mpq_class(-q) : q;
}

}  // namespace

Scalar Scalar::parse(std::string_view text, Mode mode) {
  std::string_view s = trim(text);
  if (s.empty()) throw Error("empty number");
  auto slash = s.find('/');
  mpq_class value;
  if (slash != std::string_view::npos) {
    mpq_class num = parse_decimal(trim(s.substr(0, slash)));
    mpq_class den = parse_decimal(trim(s.substr(slash + 1)));
    if (den == 0) throw Error("zero denominator in '" + std::string(s) + "'");
    value = num / den;
  } else {
    value = parse_decimal(s);
  }
  if (mode == Mode::exact) return Scalar(value);
  // Correctly rounded conversion so printed doubles round-trip bit-exactly.
  auto to_double = [](std::string_view part) {
    std::string buf(trim(part));
    return std::strtod(buf.c_str(), nullptr);
  };
  if (slash != std::string_view::npos) return Scalar(to_double(s.substr(0, slash)) / to_double(s.substr(slash + 1)));
  return Scalar(to_double(s));
}

const mpq_class& Scalar::rational() const {
  if (!is_exact()) throw ModeMismatch();
  return std::get<mpq_class>(value_);
}

double Scalar::to_double() const {
  if (is_exact()) return std::get<mpq_class>(value_).get_d();
  return std::get<double>(value_);
}

Scalar Scalar::as(Mode mode) const {
  if (mode == this->mode()) return *this;
  if (mode == Mode::floating) return Scalar(to_double());
  return Scalar(mpq_class(std::get<double>(value_)));
}

bool Scalar::is_zero() const {
  if (is_exact()) return sgn(std::get<mpq_class>(value_)) == 0;
  return std::get<double>(value_) == 0.0;
}

int Scalar::sign() const {
  if (is_exact()) return sgn(std::get<mpq_class>(value_));
  double d = std::get<double>(value_);
  return (d > 0) - (d < 0);
}

Scalar Scalar::abs() const { return sign() < 0 ? -*this : *this; }

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("division by zero");
  return Scalar::one(mode()) / *this;
}

Scalar Scalar::pow(unsigned e) const {
  Scalar result = Scalar::one(mode());
  Scalar base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

std::string Scalar::to_string() const {
  if (is_exact()) return std::get<mpq_class>(value_).get_str();
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", std::get<double>(value_));
  return buf;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (value_.index() != o.value_.index()) throw ModeMismatch();
  if (is_exact())
    std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
  else
    std::get<double>(value_) += std::get<double>(o.value_);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (value_.index() != o.value_.index()) throw ModeMismatch();
  if (is_exact())
    std::get<mpq_class>(value_) -= std::get<mpq_class>(o.value_);
  else
    std::get<double>(value_) -= std::get<double>(o.value_);
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (value_.index() != o.value_.index()) throw ModeMismatch();
  if (is_exact())
    std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
  else
    std::get<double>(value_) *= std::get<double>(o.value_);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (value_.index() != o.value_.index()) throw ModeMismatch();
  if (o.is_zero()) throw Error("division by zero");
  if (is_exact())
    std::get<mpq_class>(value_) /= std::get<mpq_class>(o.value_);
  else
    std::get<double>(value_) /= std::get<double>(o.value_);
  return *this;
}

Scalar Scalar::operator-() const {
  if (is_exact()) return Scalar(mpq_class(-std::get<mpq_class>(value_)));
  return Scalar(-std::get<double>(value_));
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.value_.index() != b.value_.index()) throw ModeMismatch();
  if (a.is_exact()) return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
  return std::get<double>(a.value_) == std::get<double>(b.value_);
}

std::partial_ordering operator<=>(const Scalar& a, const Scalar& b) {
  if (a.value_.index() != b.value_.index()) throw ModeMismatch();
  if (a.is_exact()) {
    int c = cmp(std::get<mpq_class>(a.value_), std::get<mpq_class>(b.value_));
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
  }
  return std::get<double>(a.value_) <=> std::get<double>(b.value_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Scalar factorial(unsigned n, Mode mode) {
  Scalar f = Scalar::one(mode);
  for (unsigned i = 2; i <= n; ++i) f *= Scalar::integer(i, mode);
  return f;
}

}  // namespace dunkl
