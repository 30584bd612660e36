#pragma once

#include <map>
#include <utility>

#include "plg/plmap.hpp"

namespace plg {

// Up-moving element supported exactly on (alpha, beta) with prescribed
// endpoint slopes n^p_exp at alpha and n^-q_exp at beta, built from two
// 5-interval subdivisions of [alpha, beta] mapped piece onto piece.
PLMap bump(const GroupParams& params, const Rational& alpha, const Rational& beta,
           long long p_exp, long long q_exp);

// The standard generating pair of the n=2, r=1 group and the derived
// elements a = x0^2, b = x1 x0^-1 x1^-1 x0.
PLMap thompson_x0(const GroupParams& params);
PLMap thompson_x1(const GroupParams& params);
std::pair<PLMap, PLMap> thompson_ab(const GroupParams& params);

// Orbit points alpha_k = (alpha0)a^k for a k-range; strictly increasing.
struct Ladder {
  Rational alpha0;
  std::map<long long, Rational> points;
};
Ladder ladder(const GroupParams& params, const PLMap& a, const Rational& alpha0,
              long long k_min, long long k_max);

// Reference pair for arbitrary (n, r): a = bump(0, r, n, 1/n) and
// b = bump(alpha0, (alpha0)a, n, 1/n).
std::pair<PLMap, PLMap> general_ab(const GroupParams& params, const Rational& alpha0);

}  // namespace plg
