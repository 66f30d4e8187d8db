#include "msemi/real.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <system_error>

#include "msemi/errors.hpp"

namespace msemi {

namespace {

// mpq_get_d truncates; round-to-nearest keeps mixed comparisons symmetric.
double rational_to_double(const mpq_class& q) {
  double toward_zero = q.get_d();
  if (sgn(q) == 0 || !std::isfinite(toward_zero)) return toward_zero;
  mpq_class lo_q(toward_zero);
  if (cmp(lo_q, q) == 0) return toward_zero;
  double away = std::nextafter(toward_zero, sgn(q) > 0 ? std::numeric_limits<double>::infinity()
                                                       : -std::numeric_limits<double>::infinity());
  if (!std::isfinite(away)) return toward_zero;
  mpq_class hi_q(away);
  mpq_class d_lo = abs(q - lo_q);
  mpq_class d_hi = abs(hi_q - q);
  return cmp(d_hi, d_lo) < 0 ? away : toward_zero;
}

}  // namespace

Real Real::ratio(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("Real::ratio: zero denominator");
  mpz_class n, d;
  mpz_set_si(n.get_mpz_t(), static_cast<long>(num));
  mpz_set_si(d.get_mpz_t(), static_cast<long>(den));
  return Real(mpq_class(n, d));
}

Real Real::exact_from_double(double v) {
  if (!std::isfinite(v)) throw DomainError("Real::exact_from_double: non-finite value");
  return Real(mpq_class(v));
}

Real Real::parse(std::string_view text) {
  auto fail = [&] { throw ConfigError("cannot parse exact number '" + std::string(text) + "'"); };
  if (text.empty()) fail();
  std::string s(text);
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    mpz_class num, den;
    if (num.set_str(s.substr(0, slash), 10) != 0 || den.set_str(s.substr(slash + 1), 10) != 0) fail();
    if (den == 0) fail();
    return Real(mpq_class(num, den));
  }
  // Decimal literal, taken exactly: "-12.375" -> -12375/1000.
  bool negative = false;
  std::size_t pos = 0;
  if (s[0] == '-' || s[0] == '+') {
    negative = s[0] == '-';
    pos = 1;
  }
  std::string digits;
  std::size_t frac_digits = 0;
  bool seen_point = false;
  for (; pos < s.size(); ++pos) {
    char c = s[pos];
    if (c == '.') {
      if (seen_point) fail();
      seen_point = true;
    } else if (c >= '0' && c <= '9') {
      digits.push_back(c);
      if (seen_point) ++frac_digits;
    } else {
      fail();
    }
  }
  if (digits.empty()) fail();
  mpz_class num(digits, 10);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_digits);
  if (negative) num = -num;
  return Real(mpq_class(num, den));
}

const mpq_class& Real::rational() const {
  if (!is_exact()) throw DomainError("Real::rational called on an inexact value");
  return std::get<mpq_class>(value_);
}

double Real::to_double() const {
  if (auto* d = std::get_if<double>(&value_)) return *d;
  return rational_to_double(std::get<mpq_class>(value_));
}

std::string Real::to_string() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) return q->get_str();
  double d = std::get<double>(value_);
  if (std::isinf(d)) return d > 0 ? "inf" : "-inf";
  if (std::isnan(d)) return "nan";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), d);
  return std::string(buf, res.ptr);
}

int Real::sign() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q);
  double d = std::get<double>(value_);
  return (d > 0) - (d < 0);
}

bool Real::is_finite() const {
  if (is_exact()) return true;
  return std::isfinite(std::get<double>(value_));
}

Real& Real::operator+=(const Real& o) {
  if (is_exact() && o.is_exact()) {
    std::get<mpq_class>(value_) += o.rational();
  } else {
    value_ = to_double() + o.to_double();
  }
  return *this;
}

Real& Real::operator-=(const Real& o) {
  if (is_exact() && o.is_exact()) {
    std::get<mpq_class>(value_) -= o.rational();
  } else {
    value_ = to_double() - o.to_double();
  }
  return *this;
}

Real& Real::operator*=(const Real& o) {
  if (is_exact() && o.is_exact()) {
    std::get<mpq_class>(value_) *= o.rational();
  } else {
    value_ = to_double() * o.to_double();
  }
  return *this;
}

Real& Real::operator/=(const Real& o) {
  if (is_exact() && o.is_exact()) {
    if (sgn(o.rational()) == 0) throw DomainError("exact division by zero");
    std::get<mpq_class>(value_) /= o.rational();
  } else {
    value_ = to_double() / o.to_double();
  }
  return *this;
}

Real Real::operator-() const {
  if (is_exact()) return Real(mpq_class(-rational()));
  return Real(-std::get<double>(value_));
}

int compare(const Real& a, const Real& b) {
  if (a.is_exact() && b.is_exact()) {
    int c = cmp(a.rational(), b.rational());
    return (c > 0) - (c < 0);
  }
  double x = a.to_double(), y = b.to_double();
  return (x > y) - (x < y);
}

Real pow(const Real& base, unsigned exponent) {
  if (base.is_exact()) {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.rational().get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.rational().get_den_mpz_t(), exponent);
    return Real(mpq_class(num, den));
  }
  return Real(std::pow(base.to_double(), static_cast<double>(exponent)));
}

Real min(const Real& a, const Real& b) { return b < a ? b : a; }
Real max(const Real& a, const Real& b) { return a < b ? b : a; }

Real factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Real(mpq_class(f));
}

}  // namespace msemi
