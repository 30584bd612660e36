#include "plg/centralizer.hpp"

#include <set>

namespace plg {

bool commutes(const PLMap& x, const PLMap& y) {
  return equals(compose(x, y), compose(y, x));
}

Rational slope_hom(const PLMap& y, const Rational& alpha) {
  if (eval(y, alpha) != alpha)
    throw Error(Err::NotFixed, rat_str(alpha) + " is not fixed");
  return slope_right(y, alpha);
}

std::optional<long long> solve_cyclic(const PLMap& x, const PLMap& c) {
  if (x.params() != c.params()) throw Error(Err::ParamMismatch, "different (n, r)");
  if (is_identity(c)) throw Error(Err::TrivialGenerator, "generator is the identity");
  IntervalSet supp = support(c);
  if (!supp.is_single_open_interval())
    throw Error(Err::TrivialGenerator, "generator support is not a single interval");
  Rational alpha = supp.intervals[0].first;

  // both slopes are powers of n; the generator's is never 1 at alpha
  long long ec = *log_lambda(slope_right(c, alpha), c.params());
  if (eval(x, alpha) != alpha) return std::nullopt;
  long long ex = *log_lambda(slope_right(x, alpha), x.params());
  if (ex % ec != 0) return std::nullopt;
  long long k = ex / ec;
  if (!equals(x, power(c, k))) return std::nullopt;
  return k;
}

PartitionDescriptor partition(const PLMap& x) {
  if (classify(x) != MapClass::F) throw Error(Err::NotInF, "element is not continuous");
  const Rational& r = x.params().r;

  std::set<Rational> cuts;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Segment& s = x.segments()[i];
    // breakpoints fixed with a one-sided slope change away from 1
    if (s.left > 0 && eval(x, s.left) == s.left &&
        (slope_left(x, s.left) != 1 || s.slope != 1))
      cuts.insert(s.left);
    // isolated diagonal crossings interior to a piece, when they land in A
    if (s.slope != 1) {
      Rational cross = s.intercept / (1 - s.slope);
      if (s.left < cross && cross < x.seg_right(i) && cross > 0 && cross < r &&
          in_A(cross, x.params()))
        cuts.insert(cross);
    }
  }

  PartitionDescriptor desc;
  desc.cut_points.push_back(Rational(0));
  for (const Rational& c : cuts) desc.cut_points.push_back(c);
  desc.cut_points.push_back(r);

  IntervalSet supp = support(x);
  IntervalSet fix = fixed_set(x);
  for (std::size_t i = 0; i + 1 < desc.cut_points.size(); ++i) {
    PartitionInterval iv;
    iv.lo = desc.cut_points[i];
    iv.hi = desc.cut_points[i + 1];
    IntervalSetBuilder bld;
    bld.add_open(iv.lo, iv.hi);
    bool moved = !disjoint(supp, bld.finish());
    iv.kind = moved ? IntervalKind::rigid : IntervalKind::identity;
    // does fix(x) meet (lo, hi) at a point of A?  Open fixed intervals always
    // do (A is dense); isolated fixed points are checked individually.
    iv.fix_avoids_A = true;
    for (const auto& fiv : fix.intervals) {
      Rational lo = std::max(fiv.first, iv.lo), hi = std::min(fiv.second, iv.hi);
      if (lo < hi) iv.fix_avoids_A = false;
    }
    for (const auto& p : fix.points)
      if (iv.lo < p && p < iv.hi && in_A(p, x.params())) iv.fix_avoids_A = false;
    desc.intervals.push_back(std::move(iv));
  }
  return desc;
}

}  // namespace plg
