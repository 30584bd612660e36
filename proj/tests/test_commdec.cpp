#include <functional>
#include <stdexcept>

#include "doctest.h"
#include "plg/arith.hpp"
#include "plg/commdec.hpp"
#include "plg/elements.hpp"
#include "plg/rng.hpp"
#include "plg/verify.hpp"

using namespace plg;

namespace {

const GroupParams kP2{2, Rational(1)};

Err kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  throw std::runtime_error("expected Error");
}

}  // namespace

TEST_CASE("product of a commutator list") {
  PLMap x0 = thompson_x0(kP2);
  PLMap x1 = thompson_x1(kP2);
  CommutatorList c{{{x0, x1}}};
  CHECK(equals(product_of_commutators(c), commutator(x0, x1)));
  CHECK(kind_of([] { product_of_commutators(CommutatorList{}); }) == Err::OutOfRange);
}

TEST_CASE("compressor construction mirrors the worked window") {
  Compressor s = build_compressor(kP2, Rational(1, 4), Rational(3, 4), Rational(1, 8),
                                  Rational(7, 8));
  CHECK(s.slope == Rational(1, 2));
  CHECK(s.s_lo() == Rational(1, 8));
  CHECK(s.s_hi() == Rational(7, 8));
  CHECK(s.s_eval(Rational(1, 4)) == Rational(1, 4));
  CHECK(s.s_eval(Rational(1, 2)) == Rational(1, 2));
  CHECK(s.s_eval(Rational(3, 4)) == Rational(3, 4));
  CHECK(s.s_eval(Rational(0)) == Rational(1, 8));

  CHECK(kind_of([] {
          build_compressor(kP2, Rational(1, 8), Rational(3, 4), Rational(1, 4), Rational(7, 8));
        }) == Err::BadWindows);
  CHECK(kind_of([] {
          build_compressor(kP2, Rational(1, 4), Rational(7, 8), Rational(1, 8), Rational(3, 4));
        }) == Err::BadWindows);
  CHECK(kind_of([] {
          build_compressor(kP2, Rational(1, 4), Rational(3, 4), Rational(0), Rational(7, 8));
        }) == Err::BadWindows);
  CHECK(kind_of([] {
          build_compressor(kP2, Rational(1, 3), Rational(3, 4), Rational(1, 8), Rational(7, 8));
        }) == Err::BadWindows);
}

TEST_CASE("compression is a support-shrinking homomorphism") {
  Compressor s = build_compressor(kP2, Rational(1, 4), Rational(3, 4), Rational(1, 8),
                                  Rational(7, 8));
  CHECK(is_identity(compress(identity_map(kP2), s)));

  // an element already inside the inner window is untouched
  PLMap inner = bump(kP2, Rational(1, 4), Rational(1, 2), 1, 1);
  CHECK(equals(compress(inner, s), inner));

  // a full-support element lands inside the outer window
  PLMap x0 = thompson_x0(kP2);
  PLMap cx0 = compress(x0, s);
  CHECK(support(cx0).inside_open(Rational(1, 8) - Rational(1, 1000), Rational(7, 8)));
  CHECK(in_F0(cx0));

  PLMap x1 = thompson_x1(kP2);
  CHECK(equals(compress(compose(x0, x1), s), compose(compress(x0, s), compress(x1, s))));

  // the full-support image is exactly the open window interior
  IntervalSet img = support(cx0);
  REQUIRE(img.is_single_open_interval());
  CHECK(img.intervals[0] == std::make_pair(Rational(1, 8), Rational(7, 8)));
}

TEST_CASE("translator pushes the window past itself") {
  PLMap t = translator(kP2, Rational(1, 4), Rational(1, 2));
  CHECK(eval(t, Rational(1, 4)) > Rational(1, 2));
  Rational back = eval(inverse(t), Rational(1, 2));
  CHECK(back > 0);
  CHECK(back < Rational(1, 4));
  CHECK(classify(t) == MapClass::F);
  CHECK(in_F0(t));

  CHECK(kind_of([] { translator(kP2, Rational(1, 2), Rational(1, 4)); }) == Err::BadInterval);
  CHECK(kind_of([] { translator(kP2, Rational(1, 4), Rational(1)); }) == Err::BadInterval);
}

TEST_CASE("merging commutators with disjoint supports") {
  PLMap u1 = bump(kP2, Rational(1, 16), Rational(1, 8), 1, 1);
  PLMap v1 = bump(kP2, Rational(1, 16), Rational(3, 16), 1, 1);
  PLMap u2 = bump(kP2, Rational(1, 2), Rational(5, 8), 1, 1);
  PLMap v2 = bump(kP2, Rational(1, 2), Rational(11, 16), 1, 1);

  CommutatorList single{{{u1, v1}}};
  auto [ms, ns] = merge_disjoint(single);
  CHECK(equals(ms, u1));
  CHECK(equals(ns, v1));

  CommutatorList both{{{u1, v1}, {u2, v2}}};
  auto [mx, my] = merge_disjoint(both);
  CHECK(equals(commutator(mx, my), product_of_commutators(both)));

  CommutatorList overlap{{{u1, v1}, {v1, u1}}};
  CHECK(kind_of([&] { merge_disjoint(overlap); }) == Err::SupportsOverlap);
  CHECK(kind_of([] { merge_disjoint(CommutatorList{}); }) == Err::OutOfRange);
}

TEST_CASE("two-commutator rewriting: degenerate and small cases") {
  PLMap id = identity_map(kP2);
  PLMap x0 = thompson_x0(kP2);
  PLMap x1 = thompson_x1(kP2);

  CommutatorList trivial{{{id, id}}};
  CommutatorList out = two_commutators(trivial);
  REQUIRE(out.pairs.size() == 2);
  CHECK(is_identity(product_of_commutators(out)));

  CommutatorList one{{{x0, x1}}};
  out = two_commutators(one);
  REQUIRE(out.pairs.size() == 2);
  CHECK(equals(out.pairs[0].first, x0));
  CHECK(equals(out.pairs[0].second, x1));
  CHECK(is_identity(commutator(out.pairs[1].first, out.pairs[1].second)));
  CHECK(equals(product_of_commutators(out), commutator(x0, x1)));

  CHECK(kind_of([] { two_commutators(CommutatorList{}); }) == Err::OutOfRange);

  PLMap rot = PLMap::make(kP2, {Segment{Rational(0), Rational(1), Rational(1, 4)},
                                Segment{Rational(3, 4), Rational(1), Rational(-3, 4)}});
  CHECK(kind_of([&] { two_commutators(CommutatorList{{{rot, x0}}}); }) == Err::NotInF);
  GroupParams p32(3, Rational(2));
  CHECK(kind_of([&] {
          two_commutators(CommutatorList{{{x0, x1}, {identity_map(p32), identity_map(p32)}}});
        }) == Err::ParamMismatch);
}

TEST_CASE("three commutators reduce to two with the exact product") {
  Rng rng(23);
  CommutatorList c;
  for (int j = 0; j < 3; ++j)
    c.pairs.push_back({random_bump(rng, kP2), random_bump(rng, kP2)});
  PLMap target = product_of_commutators(c);
  CommutatorList out = two_commutators(c);
  REQUIRE(out.pairs.size() == 2);
  CHECK(equals(product_of_commutators(out), target));
  for (const auto& p : out.pairs) {
    CHECK(in_F0(p.first));
    CHECK(in_F0(p.second));
  }
}

TEST_CASE("five commutators reduce to two") {
  Rng rng(29);
  CommutatorList c;
  for (int j = 0; j < 5; ++j)
    c.pairs.push_back({random_f(rng, kP2, 2), random_bump(rng, kP2)});
  PLMap target = product_of_commutators(c);
  CommutatorList out = two_commutators(c);
  REQUIRE(out.pairs.size() == 2);
  CHECK(equals(product_of_commutators(out), target));
  for (const auto& p : out.pairs) {
    CHECK(in_F0(p.first));
    CHECK(in_F0(p.second));
  }
}
