// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>

#include "fracspec/pencil.hpp"

namespace fracspec {

/// Eigenvalue sign counts of a real symmetric matrix.
struct InertiaResult {
  std::size_t negatives = 0;
  std::size_t zeros = 0;
  std::size_t positives = 0;

  friend bool operator==(const InertiaResult&, const InertiaResult&) = default;
};

/// How the leading-minor recurrence keeps its integers small.
enum class MinorScaling {
  /// Carry the minors exactly.
  exact,
  /// Divide each consecutive pair of minors by a common positive factor
  /// when one is cheaply available. Signs, and hence the result, are unchanged.
  common_factor,
};

/// Exact inertia of a symmetric tridiagonal matrix.
///
/// The matrix is scaled to integers by the lcm of its denominators and split
/// at zero couplings. On each unreduced block the leading minors
/// D_i = c_i D_{i-1} - e_{i-1}^2 D_{i-2} are formed in integer arithmetic and
/// their sign changes counted; an interior zero minor is skipped (its
/// neighbours have opposite signs) and a vanishing last minor is the block's
/// single zero eigenvalue. Without zero minors this is the same count as the
/// signs of the LDL^T pivots D_i / D_{i-1}.
InertiaResult inertia(const TridiagonalSymmetric& t, MinorScaling scaling = MinorScaling::common_factor);

/// Number of negative eigenvalues.
std::size_t index_of(const TridiagonalSymmetric& t);

}  // namespace fracspec
