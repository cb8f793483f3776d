// SPDX-License-Identifier: Apache-2.0
#include "fracspec/certify.hpp"

#include <algorithm>

#include "fracspec/errors.hpp"
#include "fracspec/inertia.hpp"

namespace fracspec {

namespace {

const Rational kQuarter(BigInt(1), BigInt(4));

bool width_ok(const Rational& lo, const Rational& hi, const BracketOptions& o) {
  const Rational w = hi - lo;
  return o.relative_tol ? w <= o.width_tol * lo : w <= o.width_tol;
}

}  // namespace

std::string_view to_string(Side side) {
  switch (side) {
    case Side::below: return "below";
    case Side::above: return "above";
    case Side::inconclusive: return "inconclusive";
  }
  return "?";
}

std::string_view to_string(BracketStatus status) {
  switch (status) {
    case BracketStatus::certified: return "certified";
    case BracketStatus::not_found: return "not_found";
    case BracketStatus::refinement_exhausted: return "refinement_exhausted";
  }
  return "?";
}

Rational margin_product(const SimilaritySet& s, const MomentData& mom, const Rational& lambda, int m) {
  return lambda * lambda * pow(s.theta_sq(), static_cast<unsigned>(m)) * mom.norm_sq;
}

int minimal_conclusive_level(const SimilaritySet& s, const MomentData& mom, const Rational& lambda) {
  // Geometric in m, so the loop is short; theta^2 < 1 guarantees it ends.
  Rational product = lambda * lambda * s.theta_sq() * mom.norm_sq;
  int m = 1;
  while (product >= kQuarter) {
    product *= s.theta_sq();
    ++m;
  }
  return m;
}

int max_level_for_cap(const SimilaritySet& s, std::size_t size_cap) {
  int m = 1;
  while (pieces_at_level(s, m + 1) <= size_cap) ++m;
  return m;
}

Side verdict(const CountingBounds& cb, int n) {
  if (!cb.conclusive_margin) return Side::inconclusive;
  // An exactly singular Galerkin matrix means lambda sits on a discrete
  // eigenvalue; no verdict is drawn there.
  if (cb.lower_zeros > 0 || cb.upper_zeros > 0) return Side::inconclusive;
  const auto nn = static_cast<std::size_t>(n);
  if (cb.upper < nn) return Side::below;
  if (cb.lower >= nn) return Side::above;
  return Side::inconclusive;
}

Certifier::Certifier(SimilaritySet s, MomentData mom, std::size_t size_cap)
    : set_(std::move(s)), mom_(std::move(mom)), size_cap_(size_cap) {
  if (mom_ != fracspec::moments(set_)) {
    throw ValidationError("moment data does not belong to the parameter set");
  }
}

Certifier::Certifier(SimilaritySet s, std::size_t size_cap)
    : set_(std::move(s)), mom_(fracspec::moments(set_)), size_cap_(size_cap) {}

const PencilParts& Certifier::parts_at(int m) {
  if (m < 1) throw ValidationError("refinement level must be >= 1");
  if (const auto it = parts_.find(m); it != parts_.end()) return it->second;
  if (const auto n = pieces_at_level(set_, m); n > size_cap_) throw SizeCapExceeded(n, size_cap_);

  SimilaritySet level = [&] {
    if (top_ && top_level_ <= m) {
      SimilaritySet cur = *top_;
      for (int i = top_level_; i < m; ++i) cur = compose(set_, cur, size_cap_);
      return cur;
    }
    return iterate(set_, m, size_cap_);
  }();
  // Moments are invariant under iteration, so mom_ serves every level.
  auto [it, inserted] = parts_.emplace(m, assemble_parts(level, mom_));
  if (!top_ || m > top_level_) {
    top_ = std::move(level);
    top_level_ = m;
  }
  return it->second;
}

CountingBounds Certifier::counting_bounds(const Rational& lambda, int m) {
  if (lambda.sign() <= 0) throw ValidationError("counting_bounds: lambda must be > 0");
  const PencilParts& parts = parts_at(m);

  CountingBounds cb;
  cb.lambda = lambda;
  cb.level = m;
  cb.dim = parts.stiffness.dim();
  const Rational product = margin_product(set_, mom_, lambda, m);
  cb.epsilon_used = Rational(2) * product;
  cb.conclusive_margin = product < kQuarter;
  if (!cb.conclusive_margin) {
    cb.lower = 0;
    cb.upper = cb.dim;
    return cb;
  }
  const InertiaResult lower = inertia(combine(parts, lambda, Rational(0)));
  const InertiaResult upper = inertia(combine(parts, lambda, cb.epsilon_used));
  cb.lower = lower.negatives;
  cb.lower_zeros = lower.zeros;
  cb.upper = upper.negatives;
  cb.upper_zeros = upper.zeros;
  return cb;
}

Side Certifier::probe(const Rational& lambda, int n, int from, int to, std::vector<TestRecord>* log) {
  if (n < 1) throw ValidationError("eigenvalue index n must be >= 1");
  from = std::max(from, minimal_conclusive_level(set_, mom_, lambda));
  for (int m = from; m <= to; ++m) {
    const CountingBounds cb = counting_bounds(lambda, m);
    const Side side = verdict(cb, n);
    if (log != nullptr) {
      log->push_back({cb.lambda, cb.level, cb.epsilon_used, cb.lower, cb.upper, cb.conclusive_margin, side});
    }
    if (side != Side::inconclusive) return side;
  }
  return Side::inconclusive;
}

Side Certifier::test_side(const Rational& lambda, int n, int m_max, std::vector<TestRecord>* log) {
  return probe(lambda, n, 1, m_max, log);
}

EigenvalueBracket Certifier::bracket(int n, const BracketOptions& o) {
  if (n < 1) throw ValidationError("eigenvalue index n must be >= 1");
  if (o.width_tol.sign() <= 0) throw ValidationError("width tolerance must be > 0");
  if (o.lambda_max.sign() <= 0) throw ValidationError("lambda_max must be > 0");
  const int cap_level = max_level_for_cap(set_, size_cap_);
  const int m_max = o.m_max > 0 ? std::min(o.m_max, cap_level) : cap_level;

  EigenvalueBracket result;
  result.n = n;
  std::optional<Rational> lo;
  std::optional<Rational> hi;

  auto search = [&](const Rational& lambda) {
    const int m0 = minimal_conclusive_level(set_, mom_, lambda);
    if (m0 > m_max) return Side::inconclusive;
    return probe(lambda, n, m0, std::min(m0 + o.search_levels, m_max), &result.log);
  };

  // Right end: 1, 2, 4, ... up to lambda_max.
  Rational lambda(1);
  bool tested_max = false;
  while (!hi) {
    if (lambda >= o.lambda_max) {
      lambda = o.lambda_max;
      tested_max = true;
    }
    const Side side = search(lambda);
    if (side == Side::above) {
      hi = lambda;
    } else if (side == Side::below) {
      lo = lambda;
    }
    if (tested_max) break;
    lambda *= Rational(2);
  }
  if (!hi) {
    result.status = BracketStatus::not_found;
    result.lo = lo.value_or(Rational(0));
    result.hi = o.lambda_max;
    result.limit = o.lambda_max;
    return result;
  }

  // Left end: halve below the right end until a "below" verdict.
  if (!lo) {
    Rational probe_at = std::min(*hi, Rational(1)) / Rational(2);
    for (int i = 0; i < 256 && !lo; ++i, probe_at /= Rational(2)) {
      const Side side = search(probe_at);
      if (side == Side::below) lo = probe_at;
      if (side == Side::above) hi = probe_at;
    }
    if (!lo) {
      result.status = BracketStatus::refinement_exhausted;
      result.lo = Rational(0);
      result.hi = *hi;
      return result;
    }
  }

  // Bisection. Midpoint first, then the 1/3 and 2/3 points; the shared level
  // ceiling only rises when all three stay inconclusive, so the point
  // nearest the eigenvalue never forces the deepest refinement on its own.
  result.trail.emplace_back(*lo, *hi);
  int ceiling = std::min(minimal_conclusive_level(set_, mom_, *hi), m_max);
  const Rational third(BigInt(1), BigInt(3));
  while (!width_ok(*lo, *hi, o)) {
    const Rational w = *hi - *lo;
    const Rational points[3] = {*lo + w / Rational(2), *lo + w * third, *lo + w * third * Rational(2)};
    int next[3];
    for (int i = 0; i < 3; ++i) {
      next[i] = std::max(minimal_conclusive_level(set_, mom_, points[i]), ceiling - 1);
    }
    bool moved = false;
    while (!moved) {
      for (int i = 0; i < 3 && !moved; ++i) {
        if (next[i] > ceiling) continue;
        const Side side = probe(points[i], n, next[i], ceiling, &result.log);
        next[i] = ceiling + 1;
        if (side == Side::below) {
          lo = points[i];
          moved = true;
        } else if (side == Side::above) {
          hi = points[i];
          moved = true;
        }
      }
      if (moved) {
        result.trail.emplace_back(*lo, *hi);
        break;
      }
      if (ceiling >= m_max) {
        result.status = BracketStatus::refinement_exhausted;
        result.lo = *lo;
        result.hi = *hi;
        result.deepest_level = ceiling;
        return result;
      }
      ++ceiling;
    }
  }

  result.status = BracketStatus::certified;
  result.lo = *lo;
  result.hi = *hi;
  for (const auto& rec : result.log) result.deepest_level = std::max(result.deepest_level, rec.level);
  return result;
}

void mirror_to_negative(EigenvalueBracket& b) {
  Rational lo = -b.hi;
  b.hi = -b.lo;
  b.lo = std::move(lo);
  b.limit = -b.limit;
  for (auto& [l, h] : b.trail) {
    std::swap(l, h);
    l = -l;
    h = -h;
  }
  b.negative = true;
}

CountingBounds counting_bounds(const SimilaritySet& s, const MomentData& mom, const Rational& lambda,
                               int m, std::size_t size_cap) {
  return Certifier(s, mom, size_cap).counting_bounds(lambda, m);
}

Side test_side(const SimilaritySet& s, const MomentData& mom, const Rational& lambda, int n, int m_max,
               std::size_t size_cap) {
  return Certifier(s, mom, size_cap).test_side(lambda, n, m_max);
}

EigenvalueBracket bracket_eigenvalue(const SimilaritySet& s, const MomentData& mom, int n,
                                     const BracketOptions& options) {
  return Certifier(s, mom, options.size_cap).bracket(n, options);
}

EigenvalueBracket negative_eigenvalue(const SimilaritySet& s, int n, const BracketOptions& options) {
  EigenvalueBracket b = Certifier(reflect(s), options.size_cap).bracket(n, options);
  mirror_to_negative(b);
  return b;
}

}  // namespace fracspec
