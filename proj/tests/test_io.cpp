#include "doctest.h"
#include "plg/elements.hpp"
#include "plg/io.hpp"
#include "plg/rng.hpp"
#include "plg/verify.hpp"

using namespace plg;

namespace {

const GroupParams kP2{2, Rational(1)};

Err parse_kind(const std::string& text) {
  try {
    parse_plmaps(text);
  } catch (const Error& e) {
    return e.kind();
  }
  throw std::runtime_error("expected Error");
}

}  // namespace

TEST_CASE("serialized identity has the documented shape") {
  CHECK(serialize_plmap(identity_map(kP2)) == "plmap r=1 n=2\n0 1 0\n");
  GroupParams p32(3, Rational(2));
  CHECK(serialize_plmap(identity_map(p32)) == "plmap r=2 n=3\n0 1 0\n");
}

TEST_CASE("named generator round-trips") {
  PLMap x0 = thompson_x0(kP2);
  std::string text = serialize_plmap(x0);
  PLMap back = parse_plmap(text);
  CHECK(equals(back, x0));
  CHECK(serialize_plmap(back) == text);
}

TEST_CASE("comments, blank lines, multiple maps") {
  std::string text =
      "# leading comment\n"
      "plmap r=1 n=2\n"
      "\n"
      "0 2 0\n"
      "1/4 1 1/4\n"
      "# interior comment\n"
      "1/2 1/2 1/2\n"
      "plmap r=1 n=2\n"
      "0 1 0\n";
  auto maps = parse_plmaps(text);
  REQUIRE(maps.size() == 2);
  CHECK(equals(maps[0], thompson_x0(kP2)));
  CHECK(is_identity(maps[1]));
  CHECK_THROWS_AS(parse_plmap(text), Error);  // exactly-one wrapper
}

TEST_CASE("malformed input reports ParseError") {
  CHECK(parse_kind("plmap r=1 n=2\n0 1 1/0\n") == Err::ParseError);
  CHECK(parse_kind("plmap r=1\n0 1 0\n") == Err::ParseError);
  CHECK(parse_kind("plmap n=2 r=1\n0 1 0\n") == Err::ParseError);
  CHECK(parse_kind("plmap r=1 n=1\n0 1 0\n") == Err::ParseError);
  CHECK(parse_kind("plmap r=1 n=2\n0 1\n") == Err::ParseError);
  CHECK(parse_kind("plmap r=1 n=2\n0 1 0 0\n") == Err::ParseError);
  CHECK(parse_kind("0 1 0\n") == Err::ParseError);
  CHECK(parse_kind("plmap r=1 n=2\n") == Err::ParseError);
  CHECK(parse_plmaps("").empty());
  CHECK_THROWS_AS(parse_plmap(""), Error);  // the single-map wrapper wants exactly one
}

TEST_CASE("parse errors carry line numbers") {
  try {
    parse_plmaps("plmap r=1 n=2\n0 1 0\nplmap r=1 n=2\n0 1 1/0\n");
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 4") != std::string::npos);
  }
}

TEST_CASE("semantic violations keep their own error kinds") {
  CHECK(parse_kind("plmap r=1 n=2\n0 3 0\n") == Err::SlopeNotInLambda);
  CHECK(parse_kind("plmap r=1 n=2\n0 2 0\n") == Err::NotBijective);
  CHECK(parse_kind("plmap r=1/3 n=2\n0 1 0\n") == Err::BadParams);
}

TEST_CASE("long random product round-trips bit-exactly") {
  Rng rng(17);
  PLMap x = random_f(rng, kP2, 8);
  CAPTURE(x.size());
  std::string text = serialize_plmap(x);
  PLMap back = parse_plmap(text);
  CHECK(equals(back, x));
  CHECK(serialize_plmap(back) == text);
}
