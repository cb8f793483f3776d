// SPDX-License-Identifier: Apache-2.0
//
// Independent reference computations used only by the tests. None of these
// call the inertia routine or the moment recurrences they check.
#pragma once

#include <random>
#include <vector>

#include "fracspec/inertia.hpp"
#include "fracspec/pencil.hpp"
#include "fracspec/selfsim.hpp"

namespace fracspec::testing {

/// Coefficients c_0..c_n of det(x I - A) for the dense form of t
/// (Faddeev-LeVerrier, exact).
std::vector<Rational> characteristic_polynomial(const TridiagonalSymmetric& t);

/// Eigenvalue sign counts from the characteristic polynomial. All roots are
/// real, so Descartes' rule of signs is exact and counts multiplicities.
InertiaResult descartes_inertia(const TridiagonalSymmetric& t);

/// Dirichlet stiffness minus lambda times mass for piecewise-linear
/// elements on a mesh with the given cell widths (weight identically 1).
TridiagonalSymmetric stiffness_minus_mass(const std::vector<Rational>& widths, const Rational& lambda);

/// int P^2 over [0,1] by replacing P on every piece of iterate(s, iterations)
/// with the chord between its exact end values P(0+) and P(1-).
double chord_norm_sq(const SimilaritySet& s, int iterations);

/// Cantor ladder via ternary digits.
double cantor_function(double x, int digits = 60);

/// Uniform random rational p/q with 1 <= q <= max_den and lo <= p/q <= hi.
Rational random_rational(std::mt19937_64& rng, int lo, int hi, int max_den);

}  // namespace fracspec::testing
