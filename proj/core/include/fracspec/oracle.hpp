// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "fracspec/selfsim.hpp"

namespace fracspec {

/// Floating-point Galerkin estimate of the n-th positive eigenvalue. Carries
/// no certificate; it exists to cross-check certified brackets.
struct OracleEstimate {
  int n = 0;
  double value = 0.0;
  int mesh_level = 0;
};

/// Negative-pivot count of a symmetric tridiagonal matrix in binary64
/// (Sturm count at zero). A zero pivot is nudged to a tiny negative value.
std::size_t float_negative_count(std::span<const double> diag, std::span<const double> offdiag);

/// The first `count` values of lambda in (0, lambda_max] at which the
/// negative count of A_{S^m}(lambda) increments, with m = mesh_level, each
/// resolved to relative width 1e-12. Shorter than `count` when fewer jumps
/// exist below lambda_max.
std::vector<OracleEstimate> approx_eigenvalues(const SimilaritySet& s, const MomentData& mom, int count,
                                               int mesh_level, double lambda_max,
                                               std::size_t size_cap = kDefaultSizeCap);

/// Rows "n,estimate,mesh_level".
void write_csv(std::ostream& os, std::span<const OracleEstimate> estimates);

}  // namespace fracspec
