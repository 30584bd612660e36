#pragma once

#include <map>

#include "plg/plmap.hpp"

namespace plg {

// Element of the restricted wreath product Z wr Z: a finitely supported
// integer vector (exponents of b_k = a^-k b a^k) plus a shift (exponent
// of a).  coeffs never stores zeros.
struct WreathElem {
  std::map<long long, long long> coeffs;
  long long shift = 0;

  bool operator==(const WreathElem& o) const = default;
};

WreathElem w_identity();
// Unique law making pl_from_wreath a homomorphism under right-action
// composition: (u v).coeffs(j) = u.coeffs(j) + v.coeffs(j + u.shift).
WreathElem w_mul(const WreathElem& u, const WreathElem& v);
WreathElem w_inv(const WreathElem& u);

// Concrete realization through a base pair (a, b): a up-moving with support
// (0, r), b up-moving with support (alpha0, (alpha0)a).
PLMap pl_from_wreath(const WreathElem& w, const PLMap& a, const PLMap& b);

// Recovers coordinates from endpoint slopes along the orbit ladder and
// verifies by round-trip; anything that fails is not in the subgroup.
WreathElem wreath_from_pl(const PLMap& g, const PLMap& a, const PLMap& b);

}  // namespace plg
