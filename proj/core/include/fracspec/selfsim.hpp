// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "fracspec/rational.hpp"

namespace fracspec {

inline constexpr std::size_t kDefaultSizeCap = std::size_t{1} << 20;

/// Parameters (a, d, beta) of a similarity operator
///
///   G f = sum_k ( d_k * f((x - alpha_k) / a_k) + beta_k ) * chi_[alpha_k, alpha_k+1)
///
/// Piece k maps [0,1] affinely onto [alpha_k, alpha_{k+1}], scales values by
/// d_k and shifts them by beta_k. A valid set has a_k > 0, sum a_k = 1 and
/// theta^2 = sum a_k d_k^2 < 1, so G is an L2 contraction with a unique fixed
/// point P. Instances are immutable; the only way to build one is validate().
class SimilaritySet {
 public:
  static SimilaritySet validate(std::vector<Rational> a, std::vector<Rational> d,
                                std::vector<Rational> beta);

  [[nodiscard]] std::size_t size() const { return a_.size(); }
  [[nodiscard]] std::span<const Rational> a() const { return a_; }
  [[nodiscard]] std::span<const Rational> d() const { return d_; }
  [[nodiscard]] std::span<const Rational> beta() const { return beta_; }
  /// N + 1 breakpoints, alpha[0] = 0 and alpha[N] = 1.
  [[nodiscard]] std::span<const Rational> alpha() const { return alpha_; }
  /// Squared L2 contraction ratio; theta itself is generally irrational.
  [[nodiscard]] const Rational& theta_sq() const { return theta_sq_; }

  friend bool operator==(const SimilaritySet& x, const SimilaritySet& y) {
    return x.a_ == y.a_ && x.d_ == y.d_ && x.beta_ == y.beta_;
  }

 private:
  SimilaritySet() = default;

  std::vector<Rational> a_;
  std::vector<Rational> d_;
  std::vector<Rational> beta_;
  std::vector<Rational> alpha_;
  Rational theta_sq_;
};

/// Exact integrals of the fixed point: p0 = int P, p1 = int P x, norm_sq = int P^2.
struct MomentData {
  Rational p0;
  Rational p1;
  Rational norm_sq;

  friend bool operator==(const MomentData&, const MomentData&) = default;
};

/// Parameter set of G_outer o G_inner. Pieces are indexed by (k, j) in
/// lexicographic order: a = a_k a_j, d = d_k d_j, beta = beta_k + d_k beta_j.
SimilaritySet compose(const SimilaritySet& outer, const SimilaritySet& inner,
                      std::size_t size_cap = kDefaultSizeCap);

/// Parameter set of G^m (N^m pieces). Same fixed point, theta^2 raised to m.
SimilaritySet iterate(const SimilaritySet& s, int m, std::size_t size_cap = kDefaultSizeCap);

/// (a, d, -beta): fixed point -P.
SimilaritySet reflect(const SimilaritySet& s);

/// Closed forms from the change of variables on each piece. The
/// denominators 1 - sum a_k d_k and 1 - sum a_k^2 d_k cannot vanish for a
/// contraction (Cauchy-Schwarz); ValidationError guards them anyway.
MomentData moments(const SimilaritySet& s);

/// Number of pieces of iterate(s, m); SIZE_MAX on overflow.
std::size_t pieces_at_level(const SimilaritySet& s, int m);

/// Piecewise-constant function on [0,1]: values[i] holds on
/// [breakpoints[i], breakpoints[i+1]).
struct StepFunction {
  std::vector<Rational> breakpoints;
  std::vector<double> values;

  static StepFunction constant(double value);
};

/// One application of the similarity operator.
StepFunction apply(const SimilaritySet& s, const StepFunction& f);

double l2_distance(const StepFunction& f, const StepFunction& g);

/// Approximation to P after `iterations` steps of the fixed-point iteration
/// started from zero, averaged onto `grid` uniform cells.
struct SampledFunction {
  std::vector<Rational> breakpoints;  // grid + 1 points, 0 .. 1
  std::vector<double> values;         // one per cell
  /// Banach bound in the sup norm (contraction max|d_k|); +inf when that is >= 1.
  double sup_error_bound = 0.0;
  /// Banach bound in L2 (contraction theta).
  double l2_error_bound = 0.0;
};

SampledFunction sample(const SimilaritySet& s, int iterations, int grid,
                       std::size_t size_cap = kDefaultSizeCap);

/// Rows "x,value" with x the left end of each cell, plus a closing row at x = 1.
void write_csv(std::ostream& os, const SampledFunction& f);

// Parameter documents: {"a": [...], "d": [...], "beta": [...]} with scalar
// literals as JSON strings (or JSON integers).
SimilaritySet parse_parameter_json(std::string_view text);
SimilaritySet load_parameter_file(const std::string& path);
std::string to_parameter_json(const SimilaritySet& s);

}  // namespace fracspec
