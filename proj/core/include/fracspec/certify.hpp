// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "fracspec/pencil.hpp"
#include "fracspec/rational.hpp"
#include "fracspec/selfsim.hpp"

namespace fracspec {

/// Certified sandwich ind A(lambda) <= ind F(lambda) <= ind(A(lambda) - eps)
/// at one refinement level of the parameter set.
struct CountingBounds {
  Rational lambda;
  int level = 0;                 // m: the set was iterated to N^m pieces
  std::size_t dim = 0;           // N^m - 1
  std::size_t lower = 0;         // negatives of A(lambda)
  std::size_t upper = 0;         // negatives of A(lambda) - eps
  std::size_t lower_zeros = 0;   // zero eigenvalues of A(lambda)
  std::size_t upper_zeros = 0;   // zero eigenvalues of A(lambda) - eps
  Rational epsilon_used;         // 2 lambda^2 theta^(2m) |P|^2
  bool conclusive_margin = false;  // lambda^2 theta^(2m) |P|^2 < 1/4
};

/// Where the n-th positive eigenvalue lies relative to a test point lambda.
enum class Side {
  below,         // nu_n >= lambda
  above,         // nu_n <= lambda
  inconclusive,
};

std::string_view to_string(Side side);

/// One evaluated level, kept for third-party re-verification.
struct TestRecord {
  Rational lambda;
  int level = 0;
  Rational epsilon;
  std::size_t lower = 0;
  std::size_t upper = 0;
  bool conclusive_margin = false;
  Side verdict = Side::inconclusive;
};

enum class BracketStatus {
  certified,
  not_found,             // no "above" verdict up to lambda_max
  refinement_exhausted,  // bisection stalled at the deepest allowed level
};

std::string_view to_string(BracketStatus status);

struct EigenvalueBracket {
  int n = 1;
  Rational lo;
  Rational hi;
  BracketStatus status = BracketStatus::refinement_exhausted;
  /// lambda_max of the search when status is not_found.
  Rational limit;
  /// True when the bracket is for the n-th negative eigenvalue; the log then
  /// refers to the reflected parameter set.
  bool negative = false;
  int deepest_level = 0;
  std::vector<TestRecord> log;
  /// Certified (lo, hi) after the initial search and after every bisection round.
  std::vector<std::pair<Rational, Rational>> trail;
};

struct BracketOptions {
  Rational width_tol = Rational(BigInt(1), BigInt(100));
  /// Stop at hi - lo <= width_tol * lo instead of hi - lo <= width_tol.
  bool relative_tol = false;
  Rational lambda_max = Rational(1L << 20);
  /// Deepest refinement level; 0 picks the largest m with N^m <= size_cap.
  int m_max = 0;
  std::size_t size_cap = kDefaultSizeCap;
  /// Levels beyond the minimal conclusive one tried per point while
  /// searching for the initial bracket.
  int search_levels = 6;
};

/// lambda^2 theta^(2m) |P|^2, the quantity that must stay below 1/4.
Rational margin_product(const SimilaritySet& s, const MomentData& mom, const Rational& lambda,
                        int m);

/// Smallest m >= 1 with margin_product < 1/4.
int minimal_conclusive_level(const SimilaritySet& s, const MomentData& mom, const Rational& lambda);

/// Largest m with N^m <= size_cap (at least 1).
int max_level_for_cap(const SimilaritySet& s, std::size_t size_cap);

/// Caches refined pencils of one parameter set and runs the certification
/// logic on top of them. Not thread-safe; use one instance per thread.
class Certifier {
 public:
  Certifier(SimilaritySet s, MomentData mom, std::size_t size_cap = kDefaultSizeCap);
  explicit Certifier(SimilaritySet s, std::size_t size_cap = kDefaultSizeCap);

  [[nodiscard]] const SimilaritySet& set() const { return set_; }
  [[nodiscard]] const MomentData& moments() const { return mom_; }
  [[nodiscard]] std::size_t size_cap() const { return size_cap_; }

  CountingBounds counting_bounds(const Rational& lambda, int m);

  /// Escalates from the minimal conclusive level to m_max.
  Side test_side(const Rational& lambda, int n, int m_max, std::vector<TestRecord>* log = nullptr);

  /// Same as test_side but restricted to levels [from, to].
  Side probe(const Rational& lambda, int n, int from, int to, std::vector<TestRecord>* log = nullptr);

  EigenvalueBracket bracket(int n, const BracketOptions& options);

 private:
  const PencilParts& parts_at(int m);

  SimilaritySet set_;
  MomentData mom_;
  std::size_t size_cap_;
  std::optional<SimilaritySet> top_;  // deepest iterate built so far
  int top_level_ = 0;
  std::map<int, PencilParts> parts_;
};

/// Verdict for index n implied by one level's counting bounds.
Side verdict(const CountingBounds& cb, int n);

CountingBounds counting_bounds(const SimilaritySet& s, const MomentData& mom, const Rational& lambda,
                               int m, std::size_t size_cap = kDefaultSizeCap);

Side test_side(const SimilaritySet& s, const MomentData& mom, const Rational& lambda, int n, int m_max,
               std::size_t size_cap = kDefaultSizeCap);

EigenvalueBracket bracket_eigenvalue(const SimilaritySet& s, const MomentData& mom, int n,
                                     const BracketOptions& options);

/// Turns a bracket for the reflected problem into one for the original:
/// endpoints are negated and swapped. The log keeps the reflected lambdas.
void mirror_to_negative(EigenvalueBracket& b);

/// n-th negative eigenvalue: minus the n-th positive eigenvalue of reflect(s).
EigenvalueBracket negative_eigenvalue(const SimilaritySet& s, int n, const BracketOptions& options);

}  // namespace fracspec
