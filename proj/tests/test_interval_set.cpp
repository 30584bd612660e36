#include "doctest.h"
#include "plg/interval_set.hpp"

using namespace plg;

namespace {

IntervalSet open_iv(const Rational& a, const Rational& b) {
  IntervalSetBuilder bld;
  bld.add_open(a, b);
  return bld.finish();
}

}  // namespace

TEST_CASE("builder merges overlaps and absorbs junction points") {
  IntervalSetBuilder bld;
  bld.add_open(Rational(1, 4), Rational(1, 2));
  bld.add_open(Rational(1, 3), Rational(2, 3));
  IntervalSet s = bld.finish();
  REQUIRE(s.intervals.size() == 1);
  CHECK(s.intervals[0] == std::make_pair(Rational(1, 4), Rational(2, 3)));
  CHECK(s.points.empty());

  IntervalSetBuilder bld2;
  bld2.add_open(Rational(0), Rational(1, 4));
  bld2.add_point(Rational(1, 4));
  bld2.add_open(Rational(1, 4), Rational(1, 2));
  IntervalSet joined = bld2.finish();
  REQUIRE(joined.intervals.size() == 1);
  CHECK(joined.intervals[0] == std::make_pair(Rational(0), Rational(1, 2)));
  CHECK(joined.points.empty());

  IntervalSetBuilder bld3;
  bld3.add_open(Rational(0), Rational(1, 4));
  bld3.add_open(Rational(1, 4), Rational(1, 2));
  IntervalSet gap = bld3.finish();
  CHECK(gap.intervals.size() == 2);
  CHECK(!gap.contains(Rational(1, 4)));

  IntervalSetBuilder bld4;
  bld4.add_open(Rational(1, 4), Rational(1, 2));
  bld4.add_point(Rational(1, 3));
  IntervalSet absorbed = bld4.finish();
  CHECK(absorbed.intervals.size() == 1);
  CHECK(absorbed.points.empty());

  IntervalSetBuilder bld5;
  bld5.add_open(Rational(1, 2), Rational(1, 2));
  CHECK(bld5.finish().empty());
}

TEST_CASE("half-open intervals and set union") {
  IntervalSetBuilder bld;
  bld.add_half_open(Rational(0), Rational(1, 2));
  IntervalSet s = bld.finish();
  CHECK(s.contains(Rational(0)));
  CHECK(s.contains(Rational(1, 4)));
  CHECK(!s.contains(Rational(1, 2)));

  IntervalSet u = unite(s, open_iv(Rational(1, 2), Rational(1)));
  CHECK(u.contains(Rational(3, 4)));
  CHECK(!u.contains(Rational(1, 2)));
  IntervalSet v = unite(u, open_iv(Rational(1, 3), Rational(2, 3)));
  REQUIRE(v.intervals.size() == 1);
  CHECK(v.intervals[0] == std::make_pair(Rational(0), Rational(1)));
  CHECK(v.points.size() == 1);
  CHECK(v.points[0] == 0);
}

TEST_CASE("membership, bounds, emptiness") {
  IntervalSet e;
  CHECK(e.empty());
  CHECK_THROWS_AS(e.inf(), Error);
  CHECK_THROWS_AS(e.sup(), Error);

  IntervalSet s = open_iv(Rational(1, 8), Rational(3, 8));
  CHECK(s.is_single_open_interval());
  CHECK(s.inf() == Rational(1, 8));
  CHECK(s.sup() == Rational(3, 8));
  CHECK(s.inside_open(Rational(0), Rational(1, 2)));
  CHECK(!s.inside_open(Rational(1, 4), Rational(1)));
  CHECK(s.contains(Rational(1, 4)));
  CHECK(!s.contains(Rational(1, 8)));
}

TEST_CASE("disjointness") {
  IntervalSet a = open_iv(Rational(0), Rational(1, 4));
  IntervalSet b = open_iv(Rational(1, 4), Rational(1, 2));
  CHECK(disjoint(a, b));
  IntervalSetBuilder bld;
  bld.add_point(Rational(1, 8));
  CHECK(!disjoint(a, bld.finish()));
}

TEST_CASE("complement within the domain") {
  IntervalSet c = complement_in(open_iv(Rational(1, 4), Rational(1, 2)), Rational(1));
  REQUIRE(c.intervals.size() == 2);
  CHECK(c.intervals[0] == std::make_pair(Rational(0), Rational(1, 4)));
  CHECK(c.intervals[1] == std::make_pair(Rational(1, 2), Rational(1)));
  REQUIRE(c.points.size() == 3);
  CHECK(c.points[0] == 0);
  CHECK(c.points[1] == Rational(1, 4));
  CHECK(c.points[2] == Rational(1, 2));

  IntervalSet whole = complement_in(IntervalSet{}, Rational(1));
  CHECK(whole.contains(Rational(0)));
  CHECK(whole.contains(Rational(99, 100)));
  CHECK(!whole.contains(Rational(1)));

  CHECK(complement_in(whole, Rational(1)).empty());
}

TEST_CASE("printing") {
  CHECK(interval_set_str(IntervalSet{}) == "empty");
  CHECK(interval_set_str(open_iv(Rational(1, 4), Rational(1, 2))) == "(1/4,1/2)");
  IntervalSetBuilder bld;
  bld.add_open(Rational(1, 2), Rational(1));
  bld.add_point(Rational(1, 4));
  CHECK(interval_set_str(bld.finish()) == "{1/4} u (1/2,1)");
}
