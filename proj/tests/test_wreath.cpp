#include <functional>
#include <stdexcept>

#include "doctest.h"
#include "plg/elements.hpp"
#include "plg/wreath.hpp"

using namespace plg;

namespace {

const GroupParams kP2{2, Rational(1)};

WreathElem w(std::map<long long, long long> coeffs, long long shift) {
  WreathElem u;
  u.coeffs = std::move(coeffs);
  u.shift = shift;
  return u;
}

Err kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  throw std::runtime_error("expected Error");
}

}  // namespace

TEST_CASE("multiplication law") {
  WreathElem a_hat = w({}, 1);
  WreathElem b_hat = w({{0, 1}}, 0);
  CHECK(w_mul(b_hat, a_hat) == w({{0, 1}}, 1));
  CHECK(w_mul(a_hat, b_hat) == w({{-1, 1}}, 1));
  CHECK(w_mul(w_identity(), a_hat) == a_hat);
  CHECK(w_mul(b_hat, w_identity()) == b_hat);
  // cancellation removes zero coefficients
  CHECK(w_mul(b_hat, w({{0, -1}}, 0)) == w_identity());
}

TEST_CASE("inversion satisfies the group law on both sides") {
  CHECK(w_inv(w({}, 3)) == w({}, -3));
  CHECK(w_inv(w({{0, 1}}, 0)) == w({{0, -1}}, 0));
  for (const WreathElem& u : {w({{0, 1}}, 1), w({{-2, 3}, {1, -1}}, -2), w({}, 0)}) {
    CHECK(w_mul(u, w_inv(u)) == w_identity());
    CHECK(w_mul(w_inv(u), u) == w_identity());
  }
}

TEST_CASE("the multiplication law matches the realization") {
  auto [a, b] = thompson_ab(kP2);
  WreathElem a_hat = w({}, 1);
  WreathElem b_hat = w({{0, 1}}, 0);
  CHECK(equals(pl_from_wreath(a_hat, a, b), a));
  CHECK(equals(pl_from_wreath(b_hat, a, b), b));
  CHECK(equals(pl_from_wreath(w_mul(a_hat, b_hat), a, b), compose(a, b)));
  CHECK(equals(pl_from_wreath(w_mul(b_hat, a_hat), a, b), compose(b, a)));
  CHECK(is_identity(pl_from_wreath(w_identity(), a, b)));

  // ({1:2},-1) spelled out by hand
  PLMap manual = compose(power(conjugate(b, a), 2), inverse(a));
  CHECK(equals(pl_from_wreath(w({{1, 2}}, -1), a, b), manual));
}

TEST_CASE("base pair validation") {
  auto [a, b] = thompson_ab(kP2);
  PLMap x0 = thompson_x0(kP2);
  PLMap x1 = thompson_x1(kP2);
  CHECK(kind_of([&, b = b] { pl_from_wreath(w_identity(), b, b); }) == Err::BadBase);
  CHECK(kind_of([&] { pl_from_wreath(w_identity(), x0, x1); }) == Err::BadBase);
  CHECK(kind_of([&, a = a, b = b] { pl_from_wreath(w_identity(), inverse(a), b); }) ==
        Err::BadBase);
}

TEST_CASE("coordinate recovery") {
  auto [a, b] = thompson_ab(kP2);
  CHECK(wreath_from_pl(b, a, b) == w({{0, 1}}, 0));
  CHECK(wreath_from_pl(a, a, b) == w({}, 1));
  CHECK(wreath_from_pl(identity_map(kP2), a, b) == w_identity());

  PLMap g = compose(std::vector<PLMap>{a, b, a, inverse(b)});
  WreathElem u = wreath_from_pl(g, a, b);
  CHECK(equals(pl_from_wreath(u, a, b), g));

  PLMap rot = PLMap::make(kP2, {Segment{Rational(0), Rational(1), Rational(1, 4)},
                                Segment{Rational(3, 4), Rational(1), Rational(-3, 4)}});
  CHECK(kind_of([&, a = a, b = b] { wreath_from_pl(rot, a, b); }) == Err::NotInSubgroup);
  CHECK(kind_of([&, a = a, b = b] { wreath_from_pl(thompson_x0(kP2), a, b); }) ==
        Err::NotInSubgroup);

  GroupParams p32(3, Rational(2));
  CHECK(kind_of([&, a = a, b = b] { wreath_from_pl(identity_map(p32), a, b); }) ==
        Err::ParamMismatch);
}

TEST_CASE("recovery works over a general pair") {
  GroupParams p32(3, Rational(2));
  auto [a, b] = general_ab(p32, Rational(1));
  WreathElem u = w({{-1, 2}, {0, -1}, {2, 1}}, -2);
  CHECK(wreath_from_pl(pl_from_wreath(u, a, b), a, b) == u);
}
