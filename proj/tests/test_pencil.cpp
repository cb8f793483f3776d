// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <random>
#include <sstream>

#include "example_sets.hpp"
#include "fracspec/errors.hpp"
#include "fracspec/pencil.hpp"
#include "oracles.hpp"

using namespace fracspec;
using fracspec::testing::q;
using fracspec::testing::qs;

TEST_CASE("Lebesgue at level 1 is the 1x1 matrix 4 - lambda/3") {
  const auto s = testing::lebesgue();
  const auto mom = moments(s);
  for (const char* lam : {"0", "1", "12", "7/5"}) {
    const auto t = assemble(s, mom, q(lam), Rational(0));
    REQUIRE(t.dim() == 1);
    CHECK(t.offdiag.empty());
    CHECK(t.diag[0] == Rational(4) - q(lam) / Rational(3));
  }
}

TEST_CASE("Lebesgue at level 2 is the uniform stiffness minus mass matrix") {
  const auto s = iterate(testing::lebesgue(), 2);
  const auto t = assemble(s, moments(s), q("5"), Rational(0));
  REQUIRE(t.dim() == 3);
  for (const auto& d : t.diag) CHECK(d == Rational(8) - q("5/6"));
  for (const auto& e : t.offdiag) CHECK(e == Rational(-4) - q("5/24"));
}

TEST_CASE("P = x on any mesh reproduces stiffness minus mass exactly") {
  // Uneven split (1/3, 2/3) and its refinements; independent FEM assembly.
  const auto s = SimilaritySet::validate(qs({"1/3", "2/3"}), qs({"1/3", "2/3"}), qs({"0", "1/3"}));
  for (int m = 1; m <= 5; ++m) {
    const auto sm = iterate(s, m);
    const std::vector<Rational> widths(sm.a().begin(), sm.a().end());
    for (const char* lam : {"0", "1", "17/3", "250"}) {
      CAPTURE(m);
      CAPTURE(lam);
      CHECK(assemble(sm, moments(s), q(lam), Rational(0)) == testing::stiffness_minus_mass(widths, q(lam)));
    }
  }
}

TEST_CASE("lambda = 0 gives the Dirichlet stiffness matrix") {
  const auto s = iterate(testing::cantor(), 2);
  const auto t = assemble(s, moments(s), Rational(0), Rational(0));
  REQUIRE(t.dim() == 8);
  for (const auto& d : t.diag) CHECK(d == Rational(18));
  for (const auto& e : t.offdiag) CHECK(e == Rational(-9));
}

TEST_CASE("epsilon scales only the stiffness part") {
  const auto s = iterate(testing::indefinite(), 3);
  const auto mom = moments(s);
  const Rational lam = q("37/4");
  const Rational eps = q("1/7");
  const auto t = assemble(s, mom, lam, eps);
  const auto k = assemble(s, mom, Rational(0), Rational(0));
  const auto v = assemble(s, mom, Rational(1), Rational(0));
  for (std::size_t i = 0; i < t.dim(); ++i) {
    const Rational vi = v.diag[i] - k.diag[i];
    CHECK(t.diag[i] == (Rational(1) - eps) * k.diag[i] + lam * vi);
  }
  for (std::size_t i = 0; i < t.offdiag.size(); ++i) {
    const Rational vi = v.offdiag[i] - k.offdiag[i];
    CHECK(t.offdiag[i] == (Rational(1) - eps) * k.offdiag[i] + lam * vi);
  }
}

TEST_CASE("property: entries are affine in lambda (three-point check)") {
  std::mt19937_64 rng(11);
  for (const auto& base : {testing::lebesgue(), testing::cantor(), testing::indefinite()}) {
    const auto s = iterate(base, 2);
    const auto mom = moments(base);
    for (int trial = 0; trial < 10; ++trial) {
      const Rational l1 = testing::random_rational(rng, 0, 100, 9);
      const Rational l2 = l1 + testing::random_rational(rng, 1, 50, 7);
      const Rational l3 = l2 + testing::random_rational(rng, 1, 50, 5);
      const Rational eps = testing::random_rational(rng, 0, 1, 8) / Rational(3);
      const auto t1 = assemble(s, mom, l1, eps);
      const auto t2 = assemble(s, mom, l2, eps);
      const auto t3 = assemble(s, mom, l3, eps);
      for (std::size_t i = 0; i < t1.dim(); ++i) {
        CHECK((t2.diag[i] - t1.diag[i]) / (l2 - l1) == (t3.diag[i] - t2.diag[i]) / (l3 - l2));
      }
      for (std::size_t i = 0; i < t1.offdiag.size(); ++i) {
        CHECK((t2.offdiag[i] - t1.offdiag[i]) / (l2 - l1) == (t3.offdiag[i] - t2.offdiag[i]) / (l3 - l2));
      }
      CHECK(combine(assemble_parts(s, mom), l2, eps) == t2);
    }
  }
}

TEST_CASE("N = 2 has no coupling; negative epsilon is rejected") {
  const auto s = testing::indefinite();
  const auto t = assemble(s, moments(s), Rational(3), Rational(0));
  CHECK(t.dim() == 1);
  CHECK(t.offdiag.empty());
  CHECK_THROWS_AS(assemble(s, moments(s), Rational(3), Rational(-1)), ValidationError);
}

TEST_CASE("CSV dump lists exact entries") {
  const auto s = iterate(testing::lebesgue(), 2);
  std::ostringstream os;
  write_csv(os, assemble(s, moments(s), Rational(0), Rational(0)));
  CHECK(os.str() == "i,diag,offdiag\n0,8,-4\n1,8,-4\n2,8,\n");
}
