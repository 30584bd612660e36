#include "plg/elements.hpp"

#include <iterator>

namespace plg {

PLMap bump(const GroupParams& params, const Rational& alpha, const Rational& beta,
           long long p_exp, long long q_exp) {
  if (alpha < 0 || beta > params.r || !(alpha < beta))
    throw Error(Err::BadInterval, "need 0 <= alpha < beta <= r");
  if (!in_A(alpha, params) || !in_A(beta, params))
    throw Error(Err::BadInterval, "endpoints must lie in Z[1/n]");
  if (p_exp < 1 || q_exp < 1)
    throw Error(Err::SlopeNotInLambda, "endpoint slope exponents must be positive");

  Rational p = lambda_pow(params, p_exp);
  Rational q = lambda_pow(params, -q_exp);
  Rational l = beta - alpha;

  // largest s = n^-j with (2+p+q)s <= 1; equality cannot happen for a power
  // of n (mod-n argument), so the middle interval below is never empty
  Rational bound = 2 + p + q;
  Rational s(1, params.n);
  while (bound * s > 1) s /= params.n;
  Rational mid = 1 - bound * s;  // relative length of the middle interval
  if (mid <= 0) throw Error(Err::NoValidS, "degenerate middle interval");

  // first subdivision lengths: sl, qsl, mid*l, psl, sl
  // second subdivision lengths: psl, sl, mid*l, sl, qsl
  Rational from[6], to[6];
  from[0] = alpha;
  from[1] = from[0] + s * l;
  from[2] = from[1] + q * s * l;
  from[3] = from[2] + mid * l;
  from[4] = from[3] + p * s * l;
  from[5] = beta;
  to[0] = alpha;
  to[1] = to[0] + p * s * l;
  to[2] = to[1] + s * l;
  to[3] = to[2] + mid * l;
  to[4] = to[3] + s * l;
  to[5] = beta;

  std::vector<Segment> segs;
  if (alpha > 0) segs.push_back(Segment{Rational(0), Rational(1), Rational(0)});
  for (int i = 0; i < 5; ++i) {
    Rational slope = (to[i + 1] - to[i]) / (from[i + 1] - from[i]);
    segs.push_back(Segment{from[i], slope, to[i] - slope * from[i]});
  }
  if (beta < params.r) segs.push_back(Segment{beta, Rational(1), Rational(0)});
  return PLMap::make(params, std::move(segs));
}

PLMap thompson_x0(const GroupParams& params) {
  if (params.n != 2 || params.r != 1)
    throw Error(Err::WrongParams, "x0 is defined for (n, r) = (2, 1)");
  return PLMap::make(params, {Segment{Rational(0), Rational(2), Rational(0)},
                              Segment{Rational(1, 4), Rational(1), Rational(1, 4)},
                              Segment{Rational(1, 2), Rational(1, 2), Rational(1, 2)}});
}

PLMap thompson_x1(const GroupParams& params) {
  if (params.n != 2 || params.r != 1)
    throw Error(Err::WrongParams, "x1 is defined for (n, r) = (2, 1)");
  return PLMap::make(params, {Segment{Rational(0), Rational(1), Rational(0)},
                              Segment{Rational(1, 2), Rational(2), Rational(-1, 2)},
                              Segment{Rational(5, 8), Rational(1), Rational(1, 8)},
                              Segment{Rational(3, 4), Rational(1, 2), Rational(1, 2)}});
}

std::pair<PLMap, PLMap> thompson_ab(const GroupParams& params) {
  PLMap x0 = thompson_x0(params);
  PLMap x1 = thompson_x1(params);
  PLMap a = compose(x0, x0);
  PLMap b = compose({x1, inverse(x0), inverse(x1), x0});
  return {a, b};
}

Ladder ladder(const GroupParams& params, const PLMap& a, const Rational& alpha0,
              long long k_min, long long k_max) {
  if (a.params() != params) throw Error(Err::BadBase, "ladder base has different (n, r)");
  if (!is_up(a)) throw Error(Err::BadBase, "ladder base must be up-moving");
  IntervalSet supp = support(a);
  if (!(supp.is_single_open_interval() && supp.intervals[0].first == 0 &&
        supp.intervals[0].second == params.r))
    throw Error(Err::BadBase, "ladder base must have support (0, r)");
  if (!(alpha0 > 0 && alpha0 < params.r && in_A(alpha0, params)))
    throw Error(Err::BadBase, "alpha0 must lie in (0, r) and in Z[1/n]");
  if (k_min > k_max) throw Error(Err::BadBase, "empty k-range");

  PLMap a_inv = inverse(a);
  Ladder lad;
  lad.alpha0 = alpha0;
  Rational cur = alpha0;
  for (long long k = 0; k <= k_max; ++k) {
    lad.points[k] = cur;
    cur = eval(a, cur);
  }
  cur = alpha0;
  for (long long k = -1; k >= k_min; --k) {
    cur = eval(a_inv, cur);
    lad.points[k] = cur;
  }
  std::erase_if(lad.points, [&](const auto& kv) { return kv.first < k_min || kv.first > k_max; });
  for (auto it = lad.points.begin(); it != lad.points.end() && std::next(it) != lad.points.end(); ++it)
    if (!(it->second < std::next(it)->second))
      throw Error(Err::BadBase, "orbit not strictly increasing");
  return lad;
}

std::pair<PLMap, PLMap> general_ab(const GroupParams& params, const Rational& alpha0) {
  if (!(alpha0 > 0 && alpha0 < params.r && in_A(alpha0, params)))
    throw Error(Err::BadInterval, "alpha0 must lie in (0, r) and in Z[1/n]");
  PLMap a = bump(params, Rational(0), params.r, 1, 1);
  Rational alpha1 = eval(a, alpha0);
  PLMap b = bump(params, alpha0, alpha1, 1, 1);
  return {a, b};
}

}  // namespace plg
