#include "plg/wreath.hpp"

namespace plg {

namespace {

// checks the base-pair conditions and returns (alpha0, alpha1)
std::pair<Rational, Rational> validate_pair(const PLMap& a, const PLMap& b) {
  if (a.params() != b.params()) throw Error(Err::BadBase, "pair has mismatched (n, r)");
  const Rational& r = a.params().r;
  if (classify(a) != MapClass::F || classify(b) != MapClass::F)
    throw Error(Err::BadBase, "pair must be continuous");
  if (!is_up(a) || !is_up(b)) throw Error(Err::BadBase, "pair must be up-moving");
  IntervalSet sa = support(a);
  if (!(sa.is_single_open_interval() && sa.intervals[0].first == 0 && sa.intervals[0].second == r))
    throw Error(Err::BadBase, "a must have support (0, r)");
  IntervalSet sb = support(b);
  if (!sb.is_single_open_interval())
    throw Error(Err::BadBase, "b must be supported on one interval");
  Rational alpha0 = sb.intervals[0].first;
  Rational alpha1 = sb.intervals[0].second;
  if (eval(a, alpha0) != alpha1)
    throw Error(Err::BadBase, "support of b must be (alpha0, (alpha0)a)");
  return {alpha0, alpha1};
}

}  // namespace

WreathElem w_identity() { return WreathElem{}; }

WreathElem w_mul(const WreathElem& u, const WreathElem& v) {
  WreathElem out;
  out.shift = u.shift + v.shift;
  for (const auto& [j, e] : u.coeffs) out.coeffs[j] += e;
  for (const auto& [j, e] : v.coeffs) out.coeffs[j - u.shift] += e;
  std::erase_if(out.coeffs, [](const auto& kv) { return kv.second == 0; });
  return out;
}

WreathElem w_inv(const WreathElem& u) {
  // w_mul(u, out) must cancel coefficientwise: out(j + u.shift) = -u(j)
  WreathElem out;
  out.shift = -u.shift;
  for (const auto& [j, e] : u.coeffs) out.coeffs[j + u.shift] = -e;
  return out;
}

PLMap pl_from_wreath(const WreathElem& w, const PLMap& a, const PLMap& b) {
  validate_pair(a, b);
  PLMap acc = identity_map(a.params());
  for (const auto& [k, e] : w.coeffs)
    acc = compose(acc, power(conjugate(b, power(a, k)), e));
  return compose(acc, power(a, w.shift));
}

WreathElem wreath_from_pl(const PLMap& g, const PLMap& a, const PLMap& b) {
  auto [alpha0, alpha1] = validate_pair(a, b);
  if (g.params() != a.params()) throw Error(Err::ParamMismatch, "g has different (n, r)");
  if (classify(g) != MapClass::F) throw Error(Err::NotInSubgroup, "element is not continuous");

  long long la = *log_lambda(slope_right(a, Rational(0)), a.params());  // >= 1 for an up a
  long long lg = *log_lambda(slope_right(g, Rational(0)), g.params());
  if (lg % la != 0) throw Error(Err::NotInSubgroup, "endpoint slope is not a power of a's");
  WreathElem w;
  w.shift = lg / la;

  PLMap h = compose(g, power(a, -w.shift));
  if (slope_right(h, Rational(0)) != 1 || slope_left(h, h.params().r) != 1)
    throw Error(Err::NotInSubgroup, "shift-reduced element moves an endpoint neighborhood");

  IntervalSet supp = support(h);
  if (!supp.empty()) {
    Rational m = supp.inf(), M = supp.sup();
    // ladder window [k_lo, k_hi] with alpha_{k_lo} <= m and alpha_{k_hi+1} >= M
    PLMap a_inv = inverse(a);
    long long k_lo = 0;
    Rational alo = alpha0;
    while (alo > m) {
      alo = eval(a_inv, alo);
      --k_lo;
    }
    long long k_hi = 0;
    Rational ahi = alpha1;  // = alpha_{k_hi + 1}
    while (ahi < M) {
      ahi = eval(a, ahi);
      ++k_hi;
    }
    Rational lb = slope_right(b, alpha0);  // right slope of every b_k at alpha_k
    Rational ak = alo;
    for (long long k = k_lo; k <= k_hi; ++k) {
      auto ek = log_lambda(slope_right(h, ak), h.params());
      if (!ek) throw Error(Err::NotInSubgroup, "orbit slope not a power of n");
      auto ck = log_lambda(lb, h.params());
      if (*ek % *ck != 0) throw Error(Err::NotInSubgroup, "orbit slope not a power of b's");
      if (*ek != 0) w.coeffs[k] = *ek / *ck;
      ak = eval(a, ak);
    }
  }

  if (!equals(pl_from_wreath(w, a, b), g))
    throw Error(Err::NotInSubgroup, "round-trip mismatch");
  return w;
}

}  // namespace plg
