// SPDX-License-Identifier: Apache-2.0
#include "fracspec/inertia.hpp"

#include <algorithm>
#include <span>

namespace fracspec {

namespace {

constexpr std::size_t kGcdPeriod = 64;

// Divides (x, y) by the largest power of two dividing both.
void strip_common_twos(BigInt& x, BigInt& y) {
  if (x == 0 && y == 0) return;
  const auto tz = [](const BigInt& v) -> mp_bitcnt_t {
    return v == 0 ? ~mp_bitcnt_t{0} : mpz_scan1(v.get_mpz_t(), 0);
  };
  const mp_bitcnt_t k = std::min(tz(x), tz(y));
  if (k > 0) {
    mpz_tdiv_q_2exp(x.get_mpz_t(), x.get_mpz_t(), k);
    mpz_tdiv_q_2exp(y.get_mpz_t(), y.get_mpz_t(), k);
  }
}

void divide_by_gcd(BigInt& x, BigInt& y) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  if (g > 1) {
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(y.get_mpz_t(), y.get_mpz_t(), g.get_mpz_t());
  }
}

// Unreduced block: every coupling in `off_sq` is nonzero.
void count_block(std::span<const BigInt> diag, std::span<const BigInt> off_sq, MinorScaling scaling,
                 InertiaResult& out) {
  BigInt prev = 1;      // D_{i-1}
  BigInt cur = diag[0]; // D_i
  BigInt next;
  int last_sign = 1;
  std::size_t negatives = 0;
  auto visit = [&](const BigInt& minor) {
    const int s = sgn(minor);
    if (s == 0) return;
    if (s != last_sign) ++negatives;
    last_sign = s;
  };
  visit(cur);
  for (std::size_t i = 1; i < diag.size(); ++i) {
    // next = c_i D_{i-1} - e^2 D_{i-2}
    mpz_mul(next.get_mpz_t(), diag[i].get_mpz_t(), cur.get_mpz_t());
    mpz_submul(next.get_mpz_t(), off_sq[i - 1].get_mpz_t(), prev.get_mpz_t());
    std::swap(prev, cur);
    std::swap(cur, next);
    visit(cur);
    if (scaling == MinorScaling::common_factor) {
      strip_common_twos(prev, cur);
      if (i % kGcdPeriod == 0) divide_by_gcd(prev, cur);
    }
  }
  const std::size_t zeros = cur == 0 ? 1 : 0;
  out.negatives += negatives;
  out.zeros += zeros;
  out.positives += diag.size() - negatives - zeros;
}

}  // namespace

InertiaResult inertia(const TridiagonalSymmetric& t, MinorScaling scaling) {
  InertiaResult result;
  const std::size_t n = t.dim();
  if (n == 0) return result;

  // A positive multiple of the matrix has the same inertia.
  BigInt scale = 1;
  auto absorb = [&](const Rational& x) {
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.raw().get_den_mpz_t());
  };
  std::for_each(t.diag.begin(), t.diag.end(), absorb);
  std::for_each(t.offdiag.begin(), t.offdiag.end(), absorb);

  auto to_int = [&](const Rational& x) {
    BigInt v = scale / x.denominator();
    v *= x.numerator();
    return v;
  };
  std::vector<BigInt> diag;
  std::vector<BigInt> off_sq;
  diag.reserve(n);
  off_sq.reserve(n > 0 ? n - 1 : 0);
  for (const auto& x : t.diag) diag.push_back(to_int(x));
  for (const auto& x : t.offdiag) {
    BigInt e = to_int(x);
    off_sq.push_back(e * e);
  }

  std::size_t start = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i + 1 == n || off_sq[i] == 0) {
      const std::size_t len = i + 1 - start;
      count_block(std::span(diag).subspan(start, len),
                  std::span<const BigInt>(off_sq).subspan(start, len - 1), scaling, result);
      start = i + 1;
    }
  }
  return result;
}

std::size_t index_of(const TridiagonalSymmetric& t) { return inertia(t).negatives; }

}  // namespace fracspec
