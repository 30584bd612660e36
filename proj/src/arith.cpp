#include "plg/arith.hpp"

#include <boost/multiprecision/integer.hpp>

#include <limits>

#include "plg/elements.hpp"

namespace plg {

bool in_F0(const PLMap& x) {
  if (classify(x) != MapClass::F) throw Error(Err::NotInF, "element is not continuous");
  return slope_right(x, Rational(0)) == 1 && slope_left(x, x.params().r) == 1;
}

ArithCode arith_code(const PLMap& x) {
  if (classify(x) != MapClass::F) throw Error(Err::NotInB, "element is not continuous");
  Rational s0 = slope_right(x, Rational(0));
  Rational sr = slope_left(x, x.params().r);
  if (s0 != sr) throw Error(Err::NotInB, "endpoint slopes differ");
  if (s0 <= 1) throw Error(Err::NotInB, "endpoint slope not > 1");
  auto k = log_lambda(s0, x.params());
  if (!k) throw Error(Err::NotInB, "endpoint slope not a power of n");
  return ArithCode{x, *k};
}

Rational split_point(const GroupParams& params) { return params.r / params.n; }

ArithCode encode(const GroupParams& params, long long m) {
  if (m < 1) throw Error(Err::OutOfRange, "encode needs m >= 1");
  Rational gamma = split_point(params);
  PLMap x1 = bump(params, Rational(0), gamma, m, 1);
  PLMap x2 = bump(params, gamma, params.r, 1, m);
  return ArithCode{compose(x1, inverse(x2)), m};
}

long long decode(const PLMap& x) { return arith_code(x).value; }

bool equiv_mod_F0(const PLMap& x, const PLMap& y) {
  if (classify(x) != MapClass::F || classify(y) != MapClass::F)
    throw Error(Err::NotInF, "elements must be continuous");
  return in_F0(compose(x, inverse(y)));
}

std::optional<DivWitness> divisibility_witness(const ArithCode& x, const ArithCode& y) {
  if (x.element.params() != y.element.params())
    throw Error(Err::ParamMismatch, "codes over different (n, r)");
  if (y.value % x.value != 0) return std::nullopt;
  long long k = y.value / x.value;

  const GroupParams& params = x.element.params();
  Rational gamma = split_point(params);
  PLMap split = compose(bump(params, Rational(0), gamma, x.value, 1),
                        inverse(bump(params, gamma, params.r, 1, x.value)));
  PLMap z = compose(inverse(x.element), split);
  PLMap w = power(split, -k);

  // the witness is correct by construction; a failure here is a bug
  if (!in_F0(z)) throw Error(Err::VerificationFailed, "z not slope-1 at the ends");
  if (!is_identity(commutator(w, compose(x.element, z))))
    throw Error(Err::VerificationFailed, "w does not commute with xz");
  if (!in_F0(compose(y.element, w)))
    throw Error(Err::VerificationFailed, "yw not slope-1 at the ends");
  return DivWitness{z, w, k};
}

namespace {

// k(k+1) through the lcm route; consecutive integers are coprime, and the
// product is nonnegative for every integer k
Integer triangle_prod(const Integer& k) {
  using boost::multiprecision::abs;
  return boost::multiprecision::lcm(abs(k), abs(k + 1));
}

long long to_ll(const Integer& n, const char* what) {
  if (n > Integer(std::numeric_limits<long long>::max()) ||
      n < Integer(std::numeric_limits<long long>::min()))
    throw Error(Err::OutOfRange, std::string(what) + " overflows");
  return n.convert_to<long long>();
}

}  // namespace

long long robinson_triangle(long long k) {
  if (k < 0) throw Error(Err::OutOfRange, "need k >= 0");
  Integer n = triangle_prod(Integer(k));
  if ((Integer(2) * n - k) % (Integer(2) * k + 1) != 0)
    throw Error(Err::IdentityViolated, "(2k+1) does not divide 2n-k");
  return to_ll(n, "triangle value");
}

long long robinson_mul(long long k, long long l) {
  // (k+l)(k+l+1) = k(k+1) + l(l+1) + 2n solved for n
  Integer t = triangle_prod(Integer(k) + l) - triangle_prod(Integer(k)) - triangle_prod(Integer(l));
  if (t % 2 != 0) throw Error(Err::IdentityViolated, "triangle sum has odd difference");
  return to_ll(t / 2, "product");
}

}  // namespace plg
