#pragma once

#include <optional>

#include "plg/plmap.hpp"

namespace plg {

// Elements with slope 1 at both ends of [0, r); contains every commutator.
bool in_F0(const PLMap& x);

// Continuous element whose two endpoint slopes agree and exceed 1; the
// exponent of that common slope is the encoded integer.
struct ArithCode {
  PLMap element;
  long long value;
};

// Validates x in B and caches the decoded value.
ArithCode arith_code(const PLMap& x);

// Standard representative of m >= 1: a two-bump element with slope n^m at
// both ends, split at gamma = r/n.
ArithCode encode(const GroupParams& params, long long m);
long long decode(const PLMap& x);
Rational split_point(const GroupParams& params);  // gamma

// Same encoded value, i.e. x y^-1 has slope 1 at both ends.
bool equiv_mod_F0(const PLMap& x, const PLMap& y);

// Witness that decode(x) divides decode(y): z adjusts x to the standard
// representative, w is the commuting element with y w in F0.
struct DivWitness {
  PLMap z;
  PLMap w;
  long long k;  // decode(y) / decode(x)
};
std::optional<DivWitness> divisibility_witness(const ArithCode& x, const ArithCode& y);

// First-order characterizations of the triangle numbers k(k+1) and of
// multiplication, evaluated the definitional way (lcm and a triangle-sum
// identity) with their side conditions asserted.
long long robinson_triangle(long long k);
long long robinson_mul(long long k, long long l);

}  // namespace plg
