// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "example_sets.hpp"
#include "fracspec/oracle.hpp"

using namespace fracspec;

TEST_CASE("float_negative_count on small matrices") {
  CHECK(float_negative_count(std::vector<double>{1.0}, {}) == 0);
  CHECK(float_negative_count(std::vector<double>{-1.0}, {}) == 1);
  // eigenvalues 1 and 3
  CHECK(float_negative_count(std::vector<double>{2.0, 2.0}, std::vector<double>{1.0}) == 0);
  // eigenvalues -1 and 3
  CHECK(float_negative_count(std::vector<double>{1.0, 1.0}, std::vector<double>{2.0}) == 1);
  // eigenvalues 0 and 2: a zero pivot counts as negative
  CHECK(float_negative_count(std::vector<double>{1.0, 1.0}, std::vector<double>{1.0}) == 1);
}

TEST_CASE("oracle: Lebesgue estimates approach (n pi)^2 from above") {
  const auto s = testing::lebesgue();
  const double pi2 = std::numbers::pi * std::numbers::pi;
  const auto e8 = approx_eigenvalues(s, moments(s), 2, 8, 1e4);
  REQUIRE(e8.size() == 2);
  CHECK(e8[0].n == 1);
  CHECK(e8[0].mesh_level == 8);
  CHECK(std::abs(e8[0].value - pi2) <= 1e-3 * pi2);
  CHECK(e8[0].value >= pi2);
  const auto e10 = approx_eigenvalues(s, moments(s), 2, 10, 1e4);
  REQUIRE(e10.size() == 2);
  CHECK(std::abs(e10[1].value - 4 * pi2) <= 5e-4 * 4 * pi2);
  CHECK(e10[0].value <= e8[0].value);
  CHECK(e10[1].value <= e8[1].value);
}

TEST_CASE("oracle: Cantor estimates stabilise with mesh level") {
  const auto s = testing::cantor();
  const auto a = approx_eigenvalues(s, moments(s), 3, 7, 1e4);
  const auto b = approx_eigenvalues(s, moments(s), 3, 8, 1e4);
  REQUIRE(a.size() == 3);
  REQUIRE(b.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(std::abs(a[i].value - b[i].value) <= 1e-2 * b[i].value);
    if (i > 0) CHECK(b[i].value > b[i - 1].value);
  }
}

TEST_CASE("oracle: no positive eigenvalues for weight -1") {
  const auto r = reflect(testing::lebesgue());
  CHECK(approx_eigenvalues(r, moments(r), 2, 6, 1e3).empty());
}

TEST_CASE("oracle: csv output") {
  std::vector<OracleEstimate> e{{1, 9.5, 8}};
  std::ostringstream os;
  write_csv(os, e);
  CHECK(os.str().rfind("n,estimate,mesh_level\n1,", 0) == 0);
}
