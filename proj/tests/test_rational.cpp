// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <random>

#include "fracspec/rational.hpp"
#include "oracles.hpp"

using namespace fracspec;

TEST_CASE("parse_scalar accepts integers, fractions and decimals") {
  CHECK(parse_scalar("1/3") == Rational(BigInt(1), BigInt(3)));
  CHECK(parse_scalar("0.5") == Rational(BigInt(1), BigInt(2)));
  CHECK(parse_scalar("5/16") == Rational(BigInt(5), BigInt(16)));
  CHECK(parse_scalar("3") == Rational(3));
  CHECK(parse_scalar("-2.25") == Rational(BigInt(-9), BigInt(4)));
  CHECK(parse_scalar("+.125") == Rational(BigInt(1), BigInt(8)));
  CHECK(parse_scalar("4/6").to_string() == "2/3");
  CHECK(parse_scalar("123456789012345678901234567890").to_string() == "123456789012345678901234567890");
}

TEST_CASE("parse_scalar rejects malformed text") {
  for (const char* bad : {"", "-", "1/0", "1/", "/2", "1.2.3", "abc", "1e5", "1 /2", ".", "0x10", "1/-2"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_scalar(bad), std::invalid_argument);
  }
}

TEST_CASE("to_float rounds to nearest") {
  CHECK(to_float(parse_scalar("1/2")) == 0.5);
  CHECK(to_float(parse_scalar("1/3")) == 1.0 / 3.0);
  CHECK(to_float(parse_scalar("-2/3")) == -2.0 / 3.0);
  CHECK(to_float(Rational(0)) == 0.0);
  CHECK(to_float(parse_scalar("0.1")) == 0.1);
  // 2^53 + 1 sits halfway between two doubles; ties go to even.
  CHECK(to_float(parse_scalar("9007199254740993")) == 9007199254740992.0);
  CHECK(to_float(parse_scalar("9007199254740995")) == 9007199254740996.0);
  BigInt huge;
  mpz_ui_pow_ui(huge.get_mpz_t(), 10, 400);
  CHECK(std::isinf(to_float(Rational(huge))));
  CHECK(to_float(-Rational(huge)) < 0.0);
}

TEST_CASE("decimal strings round-trip for finite decimals") {
  CHECK(to_decimal_string(parse_scalar("1/8")).value() == "0.125");
  CHECK(to_decimal_string(parse_scalar("-5/2")).value() == "-2.5");
  CHECK(to_decimal_string(parse_scalar("7")).value() == "7");
  CHECK_FALSE(to_decimal_string(parse_scalar("1/3")).has_value());

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> e2(0, 12), e5(0, 12);
  for (int i = 0; i < 200; ++i) {
    BigInt den;
    BigInt p2;
    BigInt p5;
    mpz_ui_pow_ui(p2.get_mpz_t(), 2, static_cast<unsigned long>(e2(rng)));
    mpz_ui_pow_ui(p5.get_mpz_t(), 5, static_cast<unsigned long>(e5(rng)));
    den = p2 * p5;
    const Rational x = testing::random_rational(rng, -50, 50, 1) / Rational(den) +
                       Rational(BigInt(i), den);
    const auto text = to_decimal_string(x);
    REQUIRE(text.has_value());
    CHECK(parse_scalar(*text) == x);
  }
}

TEST_CASE("field identities hold exactly on random rationals") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 500; ++i) {
    const Rational a = testing::random_rational(rng, -1000, 1000, 997);
    Rational b = testing::random_rational(rng, -1000, 1000, 991);
    if (b.is_zero()) b = Rational(1);
    CHECK((a + b) - b == a);
    CHECK((a * b) / b == a);
    CHECK(gcd(a.numerator(), a.denominator()) == 1);
    CHECK(a.denominator() > 0);
  }
}

TEST_CASE("division by zero throws") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::invalid_argument);
}

TEST_CASE("helpers") {
  CHECK(pow(parse_scalar("-2/3"), 3) == parse_scalar("-8/27"));
  CHECK(pow(parse_scalar("5"), 0) == Rational(1));
  CHECK(abs(parse_scalar("-1/7")) == parse_scalar("1/7"));
  CHECK(midpoint(Rational(1), Rational(2)) == parse_scalar("3/2"));
  CHECK(Rational::from_double(0.375) == parse_scalar("3/8"));
  CHECK(to_sci_string(parse_scalar("1/3"), 12) == "0.333333333333");
}
