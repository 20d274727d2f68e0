#include <doctest.h>

#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "bitrade/harmonic.hpp"
#include "bitrade/rational.hpp"

using bitrade::HarmonicTable;
using bitrade::Rational;

TEST_CASE("construction canonicalizes") {
  const Rational half(1, 2);
  const Rational two_quarters(2, 4);
  CHECK(half == two_quarters);
  CHECK(two_quarters.numerator() == "1");
  CHECK(two_quarters.denominator() == "2");

  const Rational neg(3, -6);
  CHECK(neg.numerator() == "-1");
  CHECK(neg.denominator() == "2");
  CHECK(neg == Rational(-1, 2));

  CHECK(Rational(0, 7).numerator() == "0");
  CHECK(Rational(0, 7).denominator() == "1");

  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("arithmetic basics") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK(-Rational(1, 2) == Rational(-1, 2));
  CHECK(abs(Rational(-5, 3)) == Rational(5, 3));
  CHECK(bitrade::min(Rational(1, 3), Rational(1, 2)) == Rational(1, 3));
  CHECK(bitrade::max(Rational(1, 3), Rational(1, 2)) == Rational(1, 2));

  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  Rational x(1);
  CHECK_THROWS_AS(x /= Rational(0), std::domain_error);
}

TEST_CASE("ordering is exact") {
  CHECK(Rational(1, 3) < Rational(34, 100));
  CHECK(Rational(333333, 1000000) < Rational(1, 3));
  CHECK(Rational(1, 3) <= Rational(1, 3));
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK(Rational(7, 2).sign() == 1);
  CHECK(Rational(-7, 2).sign() == -1);
  CHECK(Rational(0).is_zero());
}

TEST_CASE("parse and to_string round-trip") {
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("-5/10") == Rational(-1, 2));
  CHECK(Rational::parse("0") == Rational(0));
  CHECK(Rational::parse("2/4").to_string() == "1/2");
  CHECK(Rational(17, 24).to_string() == "17/24");
  CHECK(Rational(-3).to_string() == "-3");
  CHECK(Rational::parse(Rational(123456789, 987654321).to_string()) ==
        Rational(123456789, 987654321));

  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("+3"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/2/3"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(" 1"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
}

TEST_CASE("to_decimal rounds half to even") {
  CHECK(Rational(1, 3).to_decimal(4) == "0.3333");
  CHECK(Rational(1, 2).to_decimal(0) == "0");
  CHECK(Rational(17, 24).to_decimal(6) == "0.708333");

  CHECK(Rational(3, 2).to_decimal(0) == "2");
  CHECK(Rational(5, 2).to_decimal(0) == "2");
  CHECK(Rational(7, 2).to_decimal(0) == "4");
  CHECK(Rational(1, 8).to_decimal(2) == "0.12");
  CHECK(Rational(3, 8).to_decimal(2) == "0.38");
  CHECK(Rational(2, 3).to_decimal(3) == "0.667");
  CHECK(Rational(99, 100).to_decimal(1) == "1.0");
  CHECK(Rational(999, 1000).to_decimal(0) == "1");
  CHECK(Rational(0).to_decimal(3) == "0.000");
  CHECK(Rational(5).to_decimal(0) == "5");
  CHECK(Rational(-1, 3).to_decimal(4) == "-0.3333");
  CHECK(Rational(-1, 2).to_decimal(0) == "0");

  CHECK_THROWS_AS(Rational(1, 3).to_decimal(51), std::domain_error);
  CHECK_THROWS_AS(Rational(1, 3).to_decimal(-1), std::domain_error);
}

TEST_CASE("arithmetic round-trips on random small rationals") {
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<long long> num_dist(-50, 50);
  std::uniform_int_distribution<long long> den_dist(1, 50);
  for (int i = 0; i < 500; ++i) {
    const Rational a(num_dist(rng), den_dist(rng));
    const Rational b(num_dist(rng), den_dist(rng));
    CHECK((a + b) - b == a);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    if (!b.is_zero()) CHECK((a * b) / b == a);

    // Canonical form: coprime numerator and denominator.
    const long long n = std::stoll((a + b).numerator());
    const long long d = std::stoll((a + b).denominator());
    CHECK(d > 0);
    CHECK(std::gcd(n < 0 ? -n : n, d) == 1);
  }
}

TEST_CASE("harmonic numbers") {
  CHECK(bitrade::harmonic(1) == Rational(1));
  CHECK(bitrade::harmonic(2) == Rational(3, 2));
  CHECK(bitrade::harmonic(4) == Rational(25, 12));

  // Independent direct summation, not the incremental table.
  Rational direct;
  for (int i = 1; i <= 40; ++i) direct += Rational(1, i);
  CHECK(bitrade::harmonic(40) == direct);

  CHECK_THROWS_AS(bitrade::harmonic(0), std::domain_error);
  CHECK_THROWS_AS(bitrade::harmonic(-3), std::domain_error);
}

TEST_CASE("harmonic table increments and caching") {
  HarmonicTable table;
  table.warm_up(30);
  CHECK(table.cached_max() == 30);
  for (int n = 1; n < 30; ++n) {
    CHECK(table.at(n + 1) - table.at(n) == Rational(1, n + 1));
  }
  // Repeated calls are idempotent and do not shrink the table.
  CHECK(table.at(5) == table.at(5));
  CHECK(table.cached_max() == 30);
  table.warm_up(10);
  CHECK(table.cached_max() == 30);
}
