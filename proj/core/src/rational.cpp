// SPDX-License-Identifier: Apache-2.0
#include "fracspec/rational.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace fracspec {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

BigInt pow10(std::size_t n) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, n);
  return r;
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) {
  if (q_.get_den() == 0) throw std::invalid_argument("rational with zero denominator");
  q_.canonicalize();
}

Rational Rational::from_double(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("from_double: non-finite value");
  mpq_class q;
  mpq_set_d(q.get_mpq_t(), v);
  return Rational(q);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  q_ /= o.q_;
  return *this;
}

std::string Rational::to_string() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational parse_scalar(std::string_view text) {
  auto fail = [&](const char* why) {
    return std::invalid_argument("malformed scalar '" + std::string(text) + "': " + why);
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (body.empty()) throw fail("empty");

  BigInt num;
  BigInt den = 1;
  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    const auto p = body.substr(0, slash);
    const auto q = body.substr(slash + 1);
    if (!all_digits(p) || !all_digits(q)) throw fail("expected integer/integer");
    num = BigInt(std::string(p), 10);
    den = BigInt(std::string(q), 10);
    if (den == 0) throw fail("zero denominator");
  } else if (const auto dot = body.find('.'); dot != std::string_view::npos) {
    const auto ip = body.substr(0, dot);
    const auto fp = body.substr(dot + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) ||
        (!fp.empty() && !all_digits(fp))) {
      throw fail("expected decimal digits");
    }
    num = BigInt(std::string(ip.empty() ? "0" : ip) + std::string(fp), 10);
    den = pow10(fp.size());
  } else {
    if (!all_digits(body)) throw fail("expected digits");
    num = BigInt(std::string(body), 10);
  }
  if (negative) num = -num;
  return Rational(num, den);
}

double to_float(const Rational& x) {
  // mpq_get_d truncates toward zero; pick the nearer of the two neighbours.
  const double t = mpq_get_d(x.raw().get_mpq_t());
  if (x.is_zero()) return 0.0;
  if (std::isinf(t)) return t;
  const double away = std::nextafter(t, x.sign() > 0 ? HUGE_VAL : -HUGE_VAL);
  if (std::isinf(away)) {
    // Above the largest finite double: saturate if x is past the rounding midpoint.
    const double max = std::numeric_limits<double>::max();
    const Rational half_ulp = Rational::from_double(max - std::nextafter(max, 0.0)) / Rational(2);
    return abs(x) >= Rational::from_double(max) + half_ulp ? away : t;
  }
  const Rational dt = abs(x - Rational::from_double(t));
  const Rational da = abs(Rational::from_double(away) - x);
  if (dt < da) return t;
  if (da < dt) return away;
  std::int64_t bits = 0;
  std::memcpy(&bits, &t, sizeof bits);
  return (bits & 1) == 0 ? t : away;
}

std::optional<std::string> to_decimal_string(const Rational& x) {
  BigInt den = x.denominator();
  std::size_t twos = 0;
  std::size_t fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) { den /= 2; ++twos; }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) { den /= 5; ++fives; }
  if (den != 1) return std::nullopt;
  const std::size_t places = std::max(twos, fives);
  BigInt scaled = abs(x.numerator()) * pow10(places) / x.denominator();
  std::string digits = scaled.get_str();
  if (places > 0) {
    if (digits.size() <= places) digits.insert(0, places - digits.size() + 1, '0');
    digits.insert(digits.size() - places, ".");
  }
  return (x.sign() < 0 ? "-" : "") + digits;
}

std::string to_sci_string(const Rational& x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, to_float(x));
  return buf;
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

Rational pow(const Rational& x, unsigned exponent) {
  BigInt num;
  BigInt den;
  mpz_pow_ui(num.get_mpz_t(), x.numerator().get_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), x.denominator().get_mpz_t(), exponent);
  return Rational(num, den);
}

Rational midpoint(const Rational& a, const Rational& b) { return (a + b) / Rational(2); }

std::size_t bit_size(const Rational& x) {
  return mpz_sizeinbase(x.raw().get_num_mpz_t(), 2) + mpz_sizeinbase(x.raw().get_den_mpz_t(), 2);
}

}  // namespace fracspec
