// SPDX-License-Identifier: Apache-2.0
#include "fracspec/selfsim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "fracspec/errors.hpp"

namespace fracspec {

namespace {

Rational sum(std::span<const Rational> xs) {
  Rational s;
  for (const auto& x : xs) s += x;
  return s;
}

// Round a nonnegative double up by a couple of ulps; used for the
// float error bounds, which must not be optimistic.
double up(double x) {
  return std::nextafter(std::nextafter(x, HUGE_VAL), HUGE_VAL);
}

}  // namespace

SimilaritySet SimilaritySet::validate(std::vector<Rational> a, std::vector<Rational> d,
                                      std::vector<Rational> beta) {
  if (a.size() != d.size() || a.size() != beta.size()) {
    throw ValidationError("parameter lists a, d, beta must have equal length (got " +
                          std::to_string(a.size()) + ", " + std::to_string(d.size()) + ", " +
                          std::to_string(beta.size()) + ")");
  }
  if (a.size() < 2) throw ValidationError("a parameter set needs N >= 2 pieces");
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k].sign() <= 0) {
      throw ValidationError("piece width a_" + std::to_string(k + 1) + " = " + a[k].to_string() +
                            " is not positive");
    }
  }
  if (const Rational total = sum(a); total != Rational(1)) {
    throw ValidationError("piece widths must sum to 1 (sum a_k = " + total.to_string() + ")");
  }

  SimilaritySet s;
  s.alpha_.reserve(a.size() + 1);
  s.alpha_.emplace_back(0);
  Rational theta_sq;
  for (std::size_t k = 0; k < a.size(); ++k) {
    s.alpha_.push_back(s.alpha_.back() + a[k]);
    theta_sq += a[k] * d[k] * d[k];
  }
  if (theta_sq >= Rational(1)) {
    throw ValidationError("not a contraction: theta^2 = sum a_k d_k^2 = " + theta_sq.to_string() +
                          " is not < 1");
  }
  s.a_ = std::move(a);
  s.d_ = std::move(d);
  s.beta_ = std::move(beta);
  s.theta_sq_ = std::move(theta_sq);
  return s;
}

std::size_t pieces_at_level(const SimilaritySet& s, int m) {
  constexpr auto kMax = std::numeric_limits<std::size_t>::max();
  std::size_t n = 1;
  for (int i = 0; i < m; ++i) {
    if (n > kMax / s.size()) return kMax;
    n *= s.size();
  }
  return n;
}

SimilaritySet compose(const SimilaritySet& outer, const SimilaritySet& inner,
                      std::size_t size_cap) {
  const std::size_t n_out = outer.size();
  const std::size_t n_in = inner.size();
  if (n_in != 0 && n_out > size_cap / n_in) throw SizeCapExceeded(n_out * n_in, size_cap);

  std::vector<Rational> a;
  std::vector<Rational> d;
  std::vector<Rational> beta;
  a.reserve(n_out * n_in);
  d.reserve(n_out * n_in);
  beta.reserve(n_out * n_in);
  for (std::size_t k = 0; k < n_out; ++k) {
    for (std::size_t j = 0; j < n_in; ++j) {
      a.push_back(outer.a()[k] * inner.a()[j]);
      d.push_back(outer.d()[k] * inner.d()[j]);
      beta.push_back(outer.beta()[k] + outer.d()[k] * inner.beta()[j]);
    }
  }
  return SimilaritySet::validate(std::move(a), std::move(d), std::move(beta));
}

SimilaritySet iterate(const SimilaritySet& s, int m, std::size_t size_cap) {
  if (m < 1) throw ValidationError("iterate: level m must be >= 1");
  if (const auto n = pieces_at_level(s, m); n > size_cap) throw SizeCapExceeded(n, size_cap);
  SimilaritySet result = s;
  for (int i = 1; i < m; ++i) result = compose(s, result, size_cap);
  return result;
}

SimilaritySet reflect(const SimilaritySet& s) {
  std::vector<Rational> beta;
  beta.reserve(s.size());
  for (const auto& b : s.beta()) beta.push_back(-b);
  return SimilaritySet::validate({s.a().begin(), s.a().end()}, {s.d().begin(), s.d().end()},
                                 std::move(beta));
}

MomentData moments(const SimilaritySet& s) {
  const auto a = s.a();
  const auto d = s.d();
  const auto beta = s.beta();
  const auto alpha = s.alpha();

  // Change of variables on each piece: P(alpha_k + a_k t) = d_k P(t) + beta_k.
  Rational sum_ad;
  Rational sum_a2d;
  Rational sum_abeta;
  for (std::size_t k = 0; k < s.size(); ++k) {
    sum_ad += a[k] * d[k];
    sum_a2d += a[k] * a[k] * d[k];
    sum_abeta += a[k] * beta[k];
  }
  if (sum_ad == Rational(1)) {
    throw ValidationError("zeroth moment undefined: sum a_k d_k = 1");
  }
  if (sum_a2d == Rational(1)) {
    throw ValidationError("first moment undefined: sum a_k^2 d_k = 1");
  }

  MomentData mom;
  mom.p0 = sum_abeta / (Rational(1) - sum_ad);

  Rational p1_num;
  Rational norm_num;
  const Rational half(BigInt(1), BigInt(2));
  for (std::size_t k = 0; k < s.size(); ++k) {
    p1_num += a[k] * (a[k] * beta[k] * half + alpha[k] * d[k] * mom.p0 + alpha[k] * beta[k]);
    norm_num += a[k] * (Rational(2) * d[k] * beta[k] * mom.p0 + beta[k] * beta[k]);
  }
  mom.p1 = p1_num / (Rational(1) - sum_a2d);
  mom.norm_sq = norm_num / (Rational(1) - s.theta_sq());
  return mom;
}

StepFunction StepFunction::constant(double value) {
  return StepFunction{{Rational(0), Rational(1)}, {value}};
}

StepFunction apply(const SimilaritySet& s, const StepFunction& f) {
  StepFunction g;
  const std::size_t cells = f.values.size();
  g.breakpoints.reserve(s.size() * cells + 1);
  g.values.reserve(s.size() * cells);
  g.breakpoints.emplace_back(0);
  for (std::size_t k = 0; k < s.size(); ++k) {
    const double dk = to_float(s.d()[k]);
    const double bk = to_float(s.beta()[k]);
    for (std::size_t i = 0; i < cells; ++i) {
      g.breakpoints.push_back(s.alpha()[k] + s.a()[k] * f.breakpoints[i + 1]);
      g.values.push_back(dk * f.values[i] + bk);
    }
  }
  return g;
}

double l2_distance(const StepFunction& f, const StepFunction& g) {
  // Merge the two partitions; both cover [0,1].
  long double acc = 0.0L;
  std::size_t i = 0;
  std::size_t j = 0;
  Rational left(0);
  while (i < f.values.size() && j < g.values.size()) {
    const Rational& rf = f.breakpoints[i + 1];
    const Rational& rg = g.breakpoints[j + 1];
    const Rational& right = rf < rg ? rf : rg;
    const long double diff = static_cast<long double>(f.values[i]) - g.values[j];
    acc += diff * diff * static_cast<long double>(to_float(right - left));
    left = right;
    if (rf == right) ++i;
    if (rg == right) ++j;
  }
  return static_cast<double>(std::sqrt(acc));
}

SampledFunction sample(const SimilaritySet& s, int iterations, int grid, std::size_t size_cap) {
  if (iterations < 1) throw ValidationError("sample: iterations must be >= 1");
  if (grid < 2) throw ValidationError("sample: grid must be >= 2");

  // G^i 0 is the step function with the offsets of the level-i parameter set.
  const SimilaritySet level = iterate(s, iterations, size_cap);

  SampledFunction out;
  out.breakpoints.reserve(static_cast<std::size_t>(grid) + 1);
  for (int j = 0; j <= grid; ++j) out.breakpoints.emplace_back(BigInt(j), BigInt(grid));
  out.values.reserve(static_cast<std::size_t>(grid));

  std::size_t piece = 0;
  Rational left(0);
  for (int j = 0; j < grid; ++j) {
    const Rational& cell_right = out.breakpoints[static_cast<std::size_t>(j) + 1];
    Rational integral;
    while (true) {
      const Rational& piece_right = level.alpha()[piece + 1];
      const Rational& right = piece_right < cell_right ? piece_right : cell_right;
      integral += level.beta()[piece] * (right - left);
      left = right;
      if (piece_right == right && piece + 1 < level.size()) ++piece;
      if (right == cell_right) break;
    }
    out.values.push_back(to_float(integral * Rational(grid)));
  }

  double kappa = 0.0;
  double g0_sup = 0.0;
  long double g0_l2_sq = 0.0L;
  for (std::size_t k = 0; k < s.size(); ++k) {
    kappa = std::max(kappa, std::abs(to_float(s.d()[k])));
    const double b = std::abs(to_float(s.beta()[k]));
    g0_sup = std::max(g0_sup, b);
    g0_l2_sq += static_cast<long double>(to_float(s.a()[k])) * b * b;
  }
  kappa = up(kappa);
  if (kappa < 1.0) {
    out.sup_error_bound = up(std::pow(kappa, iterations) / (1.0 - kappa) * up(g0_sup));
  } else {
    out.sup_error_bound = std::numeric_limits<double>::infinity();
  }
  const double theta = up(std::sqrt(to_float(s.theta_sq())));
  out.l2_error_bound =
      up(std::pow(theta, iterations) / (1.0 - theta) * up(std::sqrt(static_cast<double>(g0_l2_sq))));
  return out;
}

void write_csv(std::ostream& os, const SampledFunction& f) {
  const auto precision = os.precision(17);
  os << "x,value\n";
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    os << to_float(f.breakpoints[i]) << ',' << f.values[i] << '\n';
  }
  if (!f.values.empty()) os << 1.0 << ',' << f.values.back() << '\n';
  os.precision(precision);
}

}  // namespace fracspec
