// SPDX-License-Identifier: Apache-2.0
#include "fracspec/oracle.hpp"

#include <cmath>
#include <limits>
#include <ostream>

#include "fracspec/errors.hpp"
#include "fracspec/pencil.hpp"

namespace fracspec {

std::size_t float_negative_count(std::span<const double> diag, std::span<const double> offdiag) {
  constexpr double kTiny = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
  std::size_t negatives = 0;
  double pivot = 1.0;
  for (std::size_t i = 0; i < diag.size(); ++i) {
    const double e = i == 0 ? 0.0 : offdiag[i - 1];
    pivot = diag[i] - (i == 0 ? 0.0 : e * (e / pivot));
    if (pivot == 0.0) pivot = -kTiny;
    if (pivot < 0.0) ++negatives;
  }
  return negatives;
}

namespace {

struct FloatPencil {
  std::vector<double> k_diag, k_off, v_diag, v_off;
  mutable std::vector<double> diag, off;

  std::size_t count(double lambda) const {
    for (std::size_t i = 0; i < diag.size(); ++i) diag[i] = k_diag[i] + lambda * v_diag[i];
    for (std::size_t i = 0; i < off.size(); ++i) off[i] = k_off[i] + lambda * v_off[i];
    return float_negative_count(diag, off);
  }
};

std::vector<double> to_doubles(const std::vector<Rational>& xs) {
  std::vector<double> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(to_float(x));
  return out;
}

}  // namespace

std::vector<OracleEstimate> approx_eigenvalues(const SimilaritySet& s, const MomentData& mom, int count,
                                               int mesh_level, double lambda_max, std::size_t size_cap) {
  if (count < 1) throw ValidationError("oracle: count must be >= 1");
  if (!(lambda_max > 0.0)) throw ValidationError("oracle: lambda_max must be > 0");
  const PencilParts parts = assemble_parts(iterate(s, mesh_level, size_cap), mom);
  FloatPencil pencil{to_doubles(parts.stiffness.diag), to_doubles(parts.stiffness.offdiag),
                     to_doubles(parts.weight.diag), to_doubles(parts.weight.offdiag), {}, {}};
  pencil.diag.resize(pencil.k_diag.size());
  pencil.off.resize(pencil.k_off.size());

  // For lambda > 0 the count is nondecreasing: K is positive definite, so
  // it counts the pencil eigenvalues below lambda.
  std::vector<OracleEstimate> out;
  double start = 0.0;
  for (int n = 1; n <= count; ++n) {
    const auto target = static_cast<std::size_t>(n);
    double hi = start > 0.0 ? start : 1.0;
    while (hi <= lambda_max && pencil.count(hi) < target) hi *= 2.0;
    if (hi > lambda_max) {
      hi = lambda_max;
      if (pencil.count(hi) < target) break;
    }
    double lo = start;
    if (pencil.count(lo) >= target) lo = 0.0;
    while (hi - lo > 1e-12 * hi) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      (pencil.count(mid) >= target ? hi : lo) = mid;
    }
    out.push_back({n, 0.5 * (lo + hi), mesh_level});
    start = lo;
  }
  return out;
}

void write_csv(std::ostream& os, std::span<const OracleEstimate> estimates) {
  const auto precision = os.precision(15);
  os << "n,estimate,mesh_level\n";
  for (const auto& e : estimates) os << e.n << ',' << e.value << ',' << e.mesh_level << '\n';
  os.precision(precision);
}

}  // namespace fracspec
