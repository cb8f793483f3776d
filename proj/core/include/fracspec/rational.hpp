// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace fracspec {

using BigInt = mpz_class;

/// Exact rational number in canonical form (denominator > 0, gcd = 1).
///
/// Thin value wrapper over GMP's mpq_class. Every constructor and operator
/// leaves the value canonical; no operation rounds.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : q_(v) {}                        // NOLINT(google-explicit-constructor)
  Rational(long v) : q_(v) {}                       // NOLINT(google-explicit-constructor)
  Rational(long long v) : q_(BigInt(std::to_string(v))) {}  // NOLINT
  Rational(unsigned long v) : q_(v) {}              // NOLINT
  explicit Rational(const BigInt& v) : q_(v) {}
  Rational(const BigInt& num, const BigInt& den);
  explicit Rational(mpq_class q);

  /// Exact value of a finite binary64 number.
  static Rational from_double(double v);

  [[nodiscard]] BigInt numerator() const { return q_.get_num(); }
  [[nodiscard]] BigInt denominator() const { return q_.get_den(); }
  [[nodiscard]] int sign() const { return sgn(q_); }
  [[nodiscard]] bool is_zero() const { return sign() == 0; }
  [[nodiscard]] bool is_integer() const { return q_.get_den() == 1; }
  [[nodiscard]] const mpq_class& raw() const { return q_; }

  /// "p/q", or "p" when the denominator is one.
  [[nodiscard]] std::string to_string() const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class q_;
};

/// Parses "3", "-5/16", "0.125", "-2.5". Throws std::invalid_argument on
/// malformed text or a zero denominator.
Rational parse_scalar(std::string_view text);

/// Nearest binary64 (ties to even). Saturates to +-infinity on overflow.
double to_float(const Rational& x);

/// Exact finite decimal expansion, or nullopt when the denominator has a
/// prime factor other than 2 or 5.
std::optional<std::string> to_decimal_string(const Rational& x);

/// Decimal approximation with `digits` significant digits (reporting only).
std::string to_sci_string(const Rational& x, int digits = 12);

Rational abs(const Rational& x);
Rational pow(const Rational& x, unsigned exponent);
Rational midpoint(const Rational& a, const Rational& b);

/// Approximate bit length of numerator plus denominator; used for diagnostics.
std::size_t bit_size(const Rational& x);

}  // namespace fracspec
