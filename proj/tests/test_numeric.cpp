#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "plg/numeric.hpp"
#include "plg/rng.hpp"

using namespace plg;

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("7/8") == Rational(7, 8));
  CHECK(parse_rational("-3") == Rational(-3));
  CHECK(parse_rational("4/6") == Rational(2, 3));
  CHECK(rat_str(Rational(2, 4)) == "1/2");
  CHECK(rat_str(Rational(5)) == "5");
  CHECK(rat_str(Rational(-1, 3)) == "-1/3");

  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
  CHECK_THROWS_AS(parse_rational("1/2/3"), Error);
  try {
    parse_rational("1/0");
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.kind() == Err::ParseError);
  }
}

TEST_CASE("group params validation") {
  CHECK_NOTHROW(GroupParams(2, Rational(1)));
  CHECK_NOTHROW(GroupParams(3, Rational(2)));
  CHECK_NOTHROW(GroupParams(6, Rational(5, 12)));
  CHECK_THROWS_AS(GroupParams(1, Rational(1)), Error);
  CHECK_THROWS_AS(GroupParams(2, Rational(0)), Error);
  CHECK_THROWS_AS(GroupParams(2, Rational(-1)), Error);
  CHECK_THROWS_AS(GroupParams(2, Rational(1, 3)), Error);
  try {
    GroupParams(2, Rational(1, 3));
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.kind() == Err::BadParams);
  }
  CHECK(GroupParams(2, Rational(1)) == GroupParams(2, Rational(1)));
  CHECK(GroupParams(2, Rational(1)) != GroupParams(2, Rational(2)));
}

TEST_CASE("membership in the breakpoint module") {
  GroupParams p2(2, Rational(1));
  GroupParams p6(6, Rational(1));
  CHECK(in_A(Rational(7, 8), p2));
  CHECK(!in_A(Rational(1, 3), p2));
  CHECK(in_A(Rational(5, 12), p6));
  CHECK(in_A(Rational(0), p2));
  CHECK(in_A(Rational(-3, 4), p2));
  CHECK(!in_A(Rational(1, 10), p6));
}

TEST_CASE("module closure under + and scaling by powers of n") {
  GroupParams params(3, Rational(1));
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    Rational a(rng.range(-50, 50), 27);
    Rational b(rng.range(-50, 50), 81);
    long long k = rng.range(-4, 4);
    CHECK(in_A(a + b, params));
    CHECK(in_A(a - b, params));
    CHECK(in_A(a * pow_rat(Rational(3), k), params));
  }
}

TEST_CASE("slope logarithm") {
  GroupParams p2(2, Rational(1));
  CHECK(log_lambda(Rational(8), p2) == 3);
  CHECK(log_lambda(Rational(1, 4), p2) == -2);
  CHECK(!log_lambda(Rational(6), p2).has_value());
  CHECK(log_lambda(Rational(1), p2) == 0);
  CHECK(!log_lambda(Rational(3, 2), p2).has_value());
  CHECK_THROWS_AS(log_lambda(Rational(0), p2), Error);
  CHECK_THROWS_AS(log_lambda(Rational(-2), p2), Error);

  for (long long k = -64; k <= 64; ++k) {
    CHECK(log_lambda(pow_rat(Rational(2), k), p2) == k);
    CHECK(lambda_pow(p2, k) == pow_rat(Rational(2), k));
  }
}

TEST_CASE("exact powers") {
  CHECK(pow_rat(Rational(2), -3) == Rational(1, 8));
  CHECK(pow_rat(Rational(3, 2), 2) == Rational(9, 4));
  CHECK(pow_rat(Rational(5), 0) == 1);
}

TEST_CASE("error names are stable identifiers") {
  CHECK(std::string(err_name(Err::ParseError)) == "ParseError");
  CHECK(std::string(err_name(Err::NotBijective)) == "NotBijective");
}
