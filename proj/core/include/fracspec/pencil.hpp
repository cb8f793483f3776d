// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "fracspec/rational.hpp"
#include "fracspec/selfsim.hpp"

namespace fracspec {

/// Real symmetric tridiagonal matrix stored as its two diagonals.
/// offdiag[i] couples rows i and i+1; a 1x1 matrix has an empty offdiag.
struct TridiagonalSymmetric {
  std::vector<Rational> diag;
  std::vector<Rational> offdiag;

  [[nodiscard]] std::size_t dim() const { return diag.size(); }

  friend bool operator==(const TridiagonalSymmetric&, const TridiagonalSymmetric&) = default;
};

/// Matrix of the quadratic form of A_S(lambda) - epsilon in the hat basis
/// peaking at the interior breakpoints alpha_2 .. alpha_N (dimension N - 1):
///
///   diag_k = (1-eps)(1/a_k + 1/a_{k+1})
///            + lambda (2 d_{k+1}(p1 - p0) + 2 d_k p1 + beta_k - beta_{k+1})
///   off_k  = -(1-eps)/a_k - lambda d_k (2 p1 - p0)     (rows k-1, k)
///
/// `mom` must be moments(s). Throws ValidationError for epsilon < 0.
TridiagonalSymmetric assemble(const SimilaritySet& s, const MomentData& mom,
                              const Rational& lambda, const Rational& epsilon);

/// Splits the pencil as A_S(lambda) - epsilon = (1 - epsilon) K + lambda V.
struct PencilParts {
  TridiagonalSymmetric stiffness;  // K: Dirichlet stiffness on the breakpoint mesh
  TridiagonalSymmetric weight;     // V: contribution of the weight, linear in lambda
};

PencilParts assemble_parts(const SimilaritySet& s, const MomentData& mom);

/// (1 - epsilon) K + lambda V; equal to assemble(s, mom, lambda, epsilon).
TridiagonalSymmetric combine(const PencilParts& parts, const Rational& lambda,
                             const Rational& epsilon);

/// Debug dump: rows "i,diag,offdiag" with exact entries.
void write_csv(std::ostream& os, const TridiagonalSymmetric& t);

}  // namespace fracspec
