#include "plg/commdec.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "plg/elements.hpp"

namespace plg {

PLMap product_of_commutators(const CommutatorList& c) {
  if (c.pairs.empty()) throw Error(Err::OutOfRange, "empty commutator list");
  PLMap acc = commutator(c.pairs[0].first, c.pairs[0].second);
  for (std::size_t i = 1; i < c.pairs.size(); ++i)
    acc = compose(acc, commutator(c.pairs[i].first, c.pairs[i].second));
  return acc;
}

Rational Compressor::s_eval(const Rational& t) const {
  if (t < alpha1) return slope * t + alpha1 * (1 - slope);
  if (t < beta1) return t;
  return slope * t + beta1 * (1 - slope);
}

Rational Compressor::s_lo() const { return alpha1 * (1 - slope); }

Rational Compressor::s_hi() const { return beta1 + slope * (params.r - beta1); }

Compressor build_compressor(const GroupParams& params, const Rational& alpha1,
                            const Rational& beta1, const Rational& alpha2,
                            const Rational& beta2) {
  if (!(0 < alpha2 && alpha2 < alpha1 && alpha1 < beta1 && beta1 < beta2 && beta2 < params.r))
    throw Error(Err::BadWindows, "need 0 < alpha2 < alpha1 < beta1 < beta2 < r");
  for (const Rational* q : {&alpha1, &beta1, &alpha2, &beta2})
    if (!in_A(*q, params)) throw Error(Err::BadWindows, "window points must lie in Z[1/n]");

  Compressor s{params, alpha1, beta1, alpha2, beta2, Rational(1)};
  // smallest j >= 1 pushing both ends inside the outer window; shrinking the
  // slope only helps, so the loop terminates
  for (long long j = 1;; ++j) {
    s.slope = lambda_pow(params, -j);
    if (s.s_lo() >= alpha2 && s.s_hi() <= beta2) break;
  }
  return s;
}

PLMap compress(const PLMap& x, const Compressor& s) {
  if (x.params() != s.params) throw Error(Err::ParamMismatch, "different (n, r)");
  if (classify(x) != MapClass::F) throw Error(Err::NotInF, "element is not continuous");

  // refine so every piece of x stays inside one affine piece of s on both
  // the domain and the image side
  std::set<Rational> cuts;
  for (const Segment& seg : x.segments()) cuts.insert(seg.left);
  for (const Rational& w : {s.alpha1, s.beta1}) {
    cuts.insert(w);
    cuts.insert(preimage(x, w));
  }

  std::vector<Segment> segs;
  Rational lo = s.s_lo(), hi = s.s_hi();
  if (lo > 0) segs.push_back(Segment{Rational(0), Rational(1), Rational(0)});
  for (const Rational& d : cuts) {
    const Segment& sx = x.segments()[x.seg_index_at(d)];
    // s on [d, next): slope pd, offset kd; s on the image side: pe, ke
    Rational u = s.s_eval(d);
    Rational pd = d < s.alpha1 || d >= s.beta1 ? s.slope : Rational(1);
    Rational kd = u - pd * d;
    Rational v = sx.slope * d + sx.intercept;
    Rational pe = v < s.alpha1 || v >= s.beta1 ? s.slope : Rational(1);
    Rational ke = s.s_eval(v) - pe * v;
    // conjugated rule on [s(d), s(next)): pull back through s, apply x, push
    // forward through s
    Rational slope = sx.slope * pe / pd;
    segs.push_back(Segment{u, slope, pe * sx.intercept + ke - slope * kd});
  }
  if (hi < x.params().r) segs.push_back(Segment{hi, Rational(1), Rational(0)});
  return PLMap::make(x.params(), std::move(segs));
}

PLMap translator(const GroupParams& params, const Rational& alpha, const Rational& beta) {
  if (!(0 < alpha && alpha < beta && beta < params.r))
    throw Error(Err::BadInterval, "need 0 < alpha < beta < r");
  if (!in_A(alpha, params) || !in_A(beta, params))
    throw Error(Err::BadInterval, "endpoints must lie in Z[1/n]");

  // support window (eps, r - eps') strictly containing [alpha, beta]
  Rational eps = params.r;
  do eps /= params.n;
  while (eps >= alpha);
  Rational eps2 = params.r;
  do eps2 /= params.n;
  while (params.r - eps2 <= beta);

  PLMap base = bump(params, eps, params.r - eps2, 1, 1);
  PLMap acc = base;
  // (alpha)base^k climbs to r - eps' > beta, so this terminates
  for (int k = 1; eval(acc, alpha) <= beta; ++k) {
    if (k > 100000) throw Error(Err::VerificationFailed, "translator failed to clear beta");
    acc = compose(acc, base);
  }
  return acc;
}

namespace {

IntervalSet pair_support(const std::pair<PLMap, PLMap>& p) {
  return unite(support(p.first), support(p.second));
}

}  // namespace

std::pair<PLMap, PLMap> merge_disjoint(const CommutatorList& c) {
  if (c.pairs.empty()) throw Error(Err::OutOfRange, "empty commutator list");
  std::vector<IntervalSet> supps;
  supps.reserve(c.pairs.size());
  for (const auto& p : c.pairs) {
    if (p.first.params() != c.pairs[0].first.params() ||
        p.second.params() != c.pairs[0].first.params())
      throw Error(Err::ParamMismatch, "pairs over different (n, r)");
    supps.push_back(pair_support(p));
  }
  for (std::size_t i = 0; i < supps.size(); ++i)
    for (std::size_t j = i + 1; j < supps.size(); ++j)
      if (!disjoint(supps[i], supps[j]))
        throw Error(Err::SupportsOverlap,
                    "pairs " + std::to_string(i) + " and " + std::to_string(j) + " overlap");

  PLMap px = c.pairs[0].first, py = c.pairs[0].second;
  for (std::size_t i = 1; i < c.pairs.size(); ++i) {
    px = compose(px, c.pairs[i].first);
    py = compose(py, c.pairs[i].second);
  }
  if (!equals(commutator(px, py), product_of_commutators(c)))
    throw Error(Err::VerificationFailed, "merged commutator differs from the product");
  return {px, py};
}

namespace {

// Window schedule for one reduction step: the inner window is the widest
// r n^-j ladder interval (j >= 2) containing every commutator support, the
// outer window sits one n-step further out on each side.
struct Windows {
  Rational alpha1, beta1, alpha2, beta2;
};

Windows schedule(const GroupParams& params, const std::vector<PLMap>& comms) {
  IntervalSet all;
  for (const PLMap& c : comms) all = unite(all, support(c));
  Rational m = all.empty() ? params.r / 2 : all.inf();
  Rational M = all.empty() ? params.r / 2 : all.sup();

  Windows w;
  w.alpha1 = params.r / (Rational(params.n) * params.n);
  while (w.alpha1 > m) w.alpha1 /= params.n;
  Rational tail = params.r / (Rational(params.n) * params.n);
  while (params.r - tail < M) tail /= params.n;
  w.beta1 = params.r - tail;
  w.alpha2 = w.alpha1 / params.n;
  w.beta2 = w.beta1 + (params.r - w.beta1) / params.n;
  return w;
}

// One application of the three-to-two rewriting: c1 c2 c3 equals
// (c1 c2^b c3^(b^-1)) [c2^-1 c3^(b^-1), b] once the supports are compressed
// clear of the translator's reach.
std::pair<std::pair<PLMap, PLMap>, std::pair<PLMap, PLMap>> reduce_three(
    const std::array<std::pair<PLMap, PLMap>, 3>& triple) {
  const GroupParams& params = triple[0].first.params();
  std::vector<PLMap> comms;
  for (const auto& p : triple) comms.push_back(commutator(p.first, p.second));

  Windows win = schedule(params, comms);
  Compressor s = build_compressor(params, win.alpha1, win.beta1, win.alpha2, win.beta2);

  std::array<std::pair<PLMap, PLMap>, 3> cp = triple;
  for (auto& p : cp) p = {compress(p.first, s), compress(p.second, s)};
  // compression preserves each commutator: its support sits in the fixed
  // inner window
  for (int i = 0; i < 3; ++i)
    if (!equals(commutator(cp[i].first, cp[i].second), comms[i]))
      throw Error(Err::VerificationFailed, "compression moved a commutator");

  PLMap b = translator(params, win.alpha2, win.beta2);
  PLMap b_inv = inverse(b);

  CommutatorList merged;
  merged.pairs.push_back(cp[0]);
  merged.pairs.push_back({conjugate(cp[1].first, b), conjugate(cp[1].second, b)});
  merged.pairs.push_back({conjugate(cp[2].first, b_inv), conjugate(cp[2].second, b_inv)});
  auto pair_a = merge_disjoint(merged);

  // the compression check above pins commutator(cp[i]) == comms[i]
  auto pair_b = std::make_pair(compose(inverse(comms[1]), conjugate(comms[2], b_inv)), b);
  return {pair_a, pair_b};
}

}  // namespace

CommutatorList two_commutators(const CommutatorList& c) {
  if (c.pairs.empty()) throw Error(Err::OutOfRange, "empty commutator list");
  const GroupParams& params = c.pairs[0].first.params();
  for (const auto& p : c.pairs) {
    if (p.first.params() != params || p.second.params() != params)
      throw Error(Err::ParamMismatch, "pairs over different (n, r)");
    if (classify(p.first) != MapClass::F || classify(p.second) != MapClass::F)
      throw Error(Err::NotInF, "constituents must be continuous");
  }
  PLMap target = product_of_commutators(c);

  CommutatorList out = c;
  while (out.pairs.size() > 2) {
    std::size_t n = out.pairs.size();
    std::array<std::pair<PLMap, PLMap>, 3> triple{out.pairs[n - 3], out.pairs[n - 2],
                                                  out.pairs[n - 1]};
    auto [pa, pb] = reduce_three(triple);
    out.pairs.erase(out.pairs.end() - 3, out.pairs.end());
    out.pairs.push_back(pa);
    out.pairs.push_back(pb);
  }
  while (out.pairs.size() < 2)
    out.pairs.push_back({identity_map(params), identity_map(params)});

  if (!equals(product_of_commutators(out), target))
    throw Error(Err::VerificationFailed, "decomposition changed the product");
  return out;
}

}  // namespace plg
