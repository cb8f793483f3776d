// SPDX-License-Identifier: Apache-2.0
#include "fracspec/pencil.hpp"

#include <ostream>

#include "fracspec/errors.hpp"

namespace fracspec {

TridiagonalSymmetric assemble(const SimilaritySet& s, const MomentData& mom,
                              const Rational& lambda, const Rational& epsilon) {
  if (epsilon.sign() < 0) throw ValidationError("assemble: epsilon must be >= 0");
  const auto a = s.a();
  const auto d = s.d();
  const auto beta = s.beta();
  const std::size_t dim = s.size() - 1;
  const Rational stiff = Rational(1) - epsilon;
  const Rational p1_minus_p0 = mom.p1 - mom.p0;
  const Rational two_p1_minus_p0 = Rational(2) * mom.p1 - mom.p0;

  TridiagonalSymmetric t;
  t.diag.reserve(dim);
  t.offdiag.reserve(dim - 1);
  // Row i is the hat function peaking at alpha[i+1]; it lives on pieces i and i+1.
  for (std::size_t i = 0; i < dim; ++i) {
    const Rational inv_left = Rational(1) / a[i];
    const Rational inv_right = Rational(1) / a[i + 1];
    t.diag.push_back(stiff * (inv_left + inv_right) +
                     lambda * (Rational(2) * d[i + 1] * p1_minus_p0 + Rational(2) * d[i] * mom.p1 +
                               beta[i] - beta[i + 1]));
    if (i + 1 < dim) {
      // Hats i and i+1 overlap on piece i+1.
      t.offdiag.push_back(-stiff / a[i + 1] - lambda * d[i + 1] * two_p1_minus_p0);
    }
  }
  return t;
}

PencilParts assemble_parts(const SimilaritySet& s, const MomentData& mom) {
  const auto a = s.a();
  const auto d = s.d();
  const auto beta = s.beta();
  const std::size_t dim = s.size() - 1;
  const Rational p1_minus_p0 = mom.p1 - mom.p0;
  const Rational two_p1_minus_p0 = Rational(2) * mom.p1 - mom.p0;

  PencilParts parts;
  parts.stiffness.diag.reserve(dim);
  parts.weight.diag.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const Rational inv_right = Rational(1) / a[i + 1];
    parts.stiffness.diag.push_back(Rational(1) / a[i] + inv_right);
    parts.weight.diag.push_back(Rational(2) * d[i + 1] * p1_minus_p0 +
                                Rational(2) * d[i] * mom.p1 + beta[i] - beta[i + 1]);
    if (i + 1 < dim) {
      parts.stiffness.offdiag.push_back(-inv_right);
      parts.weight.offdiag.push_back(-d[i + 1] * two_p1_minus_p0);
    }
  }
  return parts;
}

TridiagonalSymmetric combine(const PencilParts& parts, const Rational& lambda,
                             const Rational& epsilon) {
  if (epsilon.sign() < 0) throw ValidationError("combine: epsilon must be >= 0");
  const Rational stiff = Rational(1) - epsilon;
  const auto& k = parts.stiffness;
  const auto& v = parts.weight;
  TridiagonalSymmetric t;
  t.diag.reserve(k.diag.size());
  t.offdiag.reserve(k.offdiag.size());
  for (std::size_t i = 0; i < k.diag.size(); ++i) t.diag.push_back(stiff * k.diag[i] + lambda * v.diag[i]);
  for (std::size_t i = 0; i < k.offdiag.size(); ++i) {
    t.offdiag.push_back(stiff * k.offdiag[i] + lambda * v.offdiag[i]);
  }
  return t;
}

void write_csv(std::ostream& os, const TridiagonalSymmetric& t) {
  os << "i,diag,offdiag\n";
  for (std::size_t i = 0; i < t.dim(); ++i) {
    os << i << ',' << t.diag[i] << ',';
    if (i < t.offdiag.size()) os << t.offdiag[i];
    os << '\n';
  }
}

}  // namespace fracspec
