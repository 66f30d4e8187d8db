#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace msemi {

/// A real number carried as an exact rational while every input that built it
/// was exact, and as a double as soon as any inexact value enters.
///
/// Arithmetic between two exact values stays exact. Arithmetic or comparison
/// involving a double is performed in double precision.
class Real {
 public:
  Real() : value_(mpq_class(0)) {}
  Real(double v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Real(int v) : value_(mpq_class(v)) {}  // NOLINT(google-explicit-constructor)
  explicit Real(mpq_class q) : value_(std::move(q)) { std::get<mpq_class>(value_).canonicalize(); }

  static Real ratio(std::int64_t num, std::int64_t den = 1);
  static Real exact_from_double(double v);

  /// Parses "3/10" or a decimal such as "0.3" exactly; anything else throws ConfigError.
  static Real parse(std::string_view text);

  bool is_exact() const { return std::holds_alternative<mpq_class>(value_); }
  const mpq_class& rational() const;
  double to_double() const;

  /// "3/10" for exact values, shortest round-trip decimal otherwise.
  std::string to_string() const;

  int sign() const;
  bool is_zero() const { return sign() == 0; }
  bool is_finite() const;

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);

  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }
  friend Real operator*(Real a, const Real& b) { return a *= b; }
  friend Real operator/(Real a, const Real& b) { return a /= b; }
  Real operator-() const;

  friend int compare(const Real& a, const Real& b);
  friend bool operator==(const Real& a, const Real& b) { return compare(a, b) == 0; }
  friend bool operator!=(const Real& a, const Real& b) { return compare(a, b) != 0; }
  friend bool operator<(const Real& a, const Real& b) { return compare(a, b) < 0; }
  friend bool operator<=(const Real& a, const Real& b) { return compare(a, b) <= 0; }
  friend bool operator>(const Real& a, const Real& b) { return compare(a, b) > 0; }
  friend bool operator>=(const Real& a, const Real& b) { return compare(a, b) >= 0; }

 private:
  std::variant<mpq_class, double> value_;
};

Real pow(const Real& base, unsigned exponent);
Real min(const Real& a, const Real& b);
Real max(const Real& a, const Real& b);
Real factorial(unsigned n);

}  // namespace msemi
