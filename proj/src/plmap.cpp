#include "plg/plmap.hpp"

#include <algorithm>
#include <set>

namespace plg {

namespace {

void canonicalize(std::vector<Segment>& segs) {
  // Equal affine rules agree at the junction, so merging never loses a jump.
  std::vector<Segment> out;
  for (auto& s : segs) {
    if (!out.empty() && out.back().slope == s.slope && out.back().intercept == s.intercept)
      continue;
    out.push_back(s);
  }
  segs = std::move(out);
}

void validate(const GroupParams& params, const std::vector<Segment>& segs) {
  if (segs.empty()) throw Error(Err::NotBijective, "empty segment list");
  if (segs.front().left != 0)
    throw Error(Err::OutOfRange, "first breakpoint must be 0, got " + rat_str(segs.front().left));
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const Segment& s = segs[i];
    if (i > 0 && !(segs[i - 1].left < s.left))
      throw Error(Err::OutOfRange, "breakpoints not strictly increasing at " + rat_str(s.left));
    if (s.left < 0 || s.left >= params.r)
      throw Error(Err::OutOfRange, "breakpoint " + rat_str(s.left) + " outside [0,r)");
    if (!in_A(s.left, params))
      throw Error(Err::BreakpointNotInA, "breakpoint " + rat_str(s.left) + " not in Z[1/n]");
    if (s.slope <= 0 || !log_lambda(s.slope, params))
      throw Error(Err::SlopeNotInLambda, "slope " + rat_str(s.slope) + " not a power of n");
    Rational img_left = s.slope * s.left + s.intercept;
    if (!in_A(img_left, params))
      throw Error(Err::BreakpointNotInA, "image breakpoint " + rat_str(img_left) + " not in Z[1/n]");
  }
  // Bijectivity: the image intervals must tile [0, r) exactly.
  std::vector<std::pair<Rational, Rational>> images;
  images.reserve(segs.size());
  for (std::size_t i = 0; i < segs.size(); ++i) {
    Rational right = i + 1 < segs.size() ? segs[i + 1].left : params.r;
    images.emplace_back(segs[i].slope * segs[i].left + segs[i].intercept,
                        segs[i].slope * right + segs[i].intercept);
  }
  std::sort(images.begin(), images.end());
  if (images.front().first != 0)
    throw Error(Err::NotBijective, "image does not start at 0");
  for (std::size_t i = 0; i + 1 < images.size(); ++i) {
    if (images[i].second != images[i + 1].first)
      throw Error(Err::NotBijective,
                  images[i].second < images[i + 1].first
                      ? "image gap at " + rat_str(images[i].second)
                      : "image overlap at " + rat_str(images[i + 1].first));
  }
  if (images.back().second != params.r)
    throw Error(Err::NotBijective, "image does not end at r");
}

}  // namespace

PLMap::PLMap(GroupParams params, std::vector<Segment> segments)
    : params_(std::move(params)), segments_(std::move(segments)) {}

PLMap PLMap::make(const GroupParams& params, std::vector<Segment> segments) {
  validate(params, segments);
  canonicalize(segments);
  return PLMap(params, std::move(segments));
}

Rational PLMap::seg_right(std::size_t i) const {
  return i + 1 < segments_.size() ? segments_[i + 1].left : params_.r;
}

std::size_t PLMap::seg_index_at(const Rational& t) const {
  if (t < 0 || t >= params_.r)
    throw Error(Err::OutOfDomain, rat_str(t) + " outside [0,r)");
  std::size_t lo = 0, hi = segments_.size();
  while (hi - lo > 1) {
    std::size_t mid = (lo + hi) / 2;
    if (segments_[mid].left <= t)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

std::size_t PLMap::seg_index_left_of(const Rational& t) const {
  if (t <= 0 || t > params_.r)
    throw Error(Err::OutOfDomain, rat_str(t) + " outside (0,r]");
  std::size_t lo = 0, hi = segments_.size();
  while (hi - lo > 1) {
    std::size_t mid = (lo + hi) / 2;
    if (segments_[mid].left < t)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

PLMap identity_map(const GroupParams& params) {
  return PLMap::make(params, {Segment{Rational(0), Rational(1), Rational(0)}});
}

bool is_identity(const PLMap& x) {
  return x.size() == 1 && x.segments()[0].slope == 1 && x.segments()[0].intercept == 0;
}

Rational eval(const PLMap& x, const Rational& t) {
  const Segment& s = x.segments()[x.seg_index_at(t)];
  return s.slope * t + s.intercept;
}

Rational left_limit(const PLMap& x, const Rational& t) {
  const Segment& s = x.segments()[x.seg_index_left_of(t)];
  return s.slope * t + s.intercept;
}

Rational preimage(const PLMap& x, const Rational& e) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Segment& s = x.segments()[i];
    Rational lo = s.slope * s.left + s.intercept;
    Rational hi = s.slope * x.seg_right(i) + s.intercept;
    if (lo <= e && e < hi) return (e - s.intercept) / s.slope;
  }
  throw Error(Err::OutOfDomain, "no preimage for " + rat_str(e));
}

PLMap compose(const PLMap& x, const PLMap& y) {
  if (x.params() != y.params())
    throw Error(Err::ParamMismatch, "composing maps with different (n, r)");
  // Image intervals of x tile [0, r), so sorting them by left endpoint lets
  // every cut of y pull back through a binary search instead of a scan.
  std::vector<std::pair<Rational, std::size_t>> img;
  img.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Segment& s = x.segments()[i];
    img.emplace_back(s.slope * s.left + s.intercept, i);
  }
  std::sort(img.begin(), img.end());
  std::vector<Rational> cuts;
  cuts.reserve(x.size() + y.size());
  for (const Segment& s : x.segments()) cuts.push_back(s.left);
  std::size_t nx = cuts.size();
  for (const Segment& s : y.segments())
    if (s.left > 0) {
      auto it = std::upper_bound(
          img.begin(), img.end(), s.left,
          [](const Rational& v, const std::pair<Rational, std::size_t>& e) { return v < e.first; });
      const Segment& sx = x.segments()[std::prev(it)->second];
      cuts.push_back((s.left - sx.intercept) / sx.slope);
    }
  std::sort(cuts.begin() + nx, cuts.end());
  std::inplace_merge(cuts.begin(), cuts.begin() + nx, cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<Segment> segs;
  segs.reserve(cuts.size());
  for (const Rational& d : cuts) {
    const Segment& sx = x.segments()[x.seg_index_at(d)];
    Rational u = sx.slope * d + sx.intercept;
    const Segment& sy = y.segments()[y.seg_index_at(u)];
    segs.push_back(Segment{d, sx.slope * sy.slope, sx.intercept * sy.slope + sy.intercept});
  }
  return PLMap::make(x.params(), std::move(segs));
}

PLMap compose(const std::vector<PLMap>& factors) {
  if (factors.empty()) throw Error(Err::OutOfRange, "empty composition");
  PLMap acc = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) acc = compose(acc, factors[i]);
  return acc;
}

PLMap inverse(const PLMap& x) {
  std::vector<Segment> segs;
  segs.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Segment& s = x.segments()[i];
    segs.push_back(Segment{s.slope * s.left + s.intercept, 1 / s.slope, -s.intercept / s.slope});
  }
  std::sort(segs.begin(), segs.end(),
            [](const Segment& a, const Segment& b) { return a.left < b.left; });
  return PLMap::make(x.params(), std::move(segs));
}

PLMap power(const PLMap& x, long long k) {
  if (k == 0) return identity_map(x.params());
  PLMap base = k < 0 ? inverse(x) : x;
  long long e = k < 0 ? -k : k;
  PLMap acc = base;
  for (long long i = 1; i < e; ++i) acc = compose(acc, base);
  return acc;
}

bool equals(const PLMap& x, const PLMap& y) {
  if (x.params() != y.params())
    throw Error(Err::ParamMismatch, "comparing maps with different (n, r)");
  return x.segments() == y.segments();
}

IntervalSet support(const PLMap& x) {
  // Refine by breakpoints and by each piece's diagonal crossing; on the
  // refined grid every open gap is entirely moved or entirely fixed.
  std::set<Rational> cuts;
  cuts.insert(Rational(0));
  cuts.insert(x.params().r);
  for (const Segment& s : x.segments())
    if (s.left > 0) cuts.insert(s.left);
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Segment& s = x.segments()[i];
    if (s.slope != 1) {
      Rational cross = s.intercept / (1 - s.slope);
      if (s.left < cross && cross < x.seg_right(i)) cuts.insert(cross);
    }
  }
  std::vector<Rational> grid(cuts.begin(), cuts.end());
  IntervalSetBuilder bld;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    const Segment& s = x.segments()[x.seg_index_at(grid[i])];
    if (s.slope != 1 || s.intercept != 0) bld.add_open(grid[i], grid[i + 1]);
    if (eval(x, grid[i]) != grid[i]) bld.add_point(grid[i]);
  }
  return bld.finish();
}

IntervalSet fixed_set(const PLMap& x) { return complement_in(support(x), x.params().r); }

IntervalSet image_set(const IntervalSet& s, const PLMap& x) {
  IntervalSetBuilder bld;
  for (const auto& iv : s.intervals) {
    // split (a, b) at breakpoints of x; each chunk maps to an open interval,
    // each interior split point tags along as a point image
    std::vector<Rational> stops;
    stops.push_back(iv.first);
    for (const Segment& seg : x.segments())
      if (iv.first < seg.left && seg.left < iv.second) stops.push_back(seg.left);
    stops.push_back(iv.second);
    for (std::size_t i = 0; i + 1 < stops.size(); ++i) {
      const Segment& seg = x.segments()[x.seg_index_at(stops[i])];
      bld.add_open(seg.slope * stops[i] + seg.intercept, seg.slope * stops[i + 1] + seg.intercept);
      if (i > 0) bld.add_point(eval(x, stops[i]));
    }
  }
  for (const auto& p : s.points) bld.add_point(eval(x, p));
  return bld.finish();
}

Rational slope_right(const PLMap& x, const Rational& t) {
  return x.segments()[x.seg_index_at(t)].slope;
}

Rational slope_left(const PLMap& x, const Rational& t) {
  return x.segments()[x.seg_index_left_of(t)].slope;
}

const char* map_class_name(MapClass c) {
  switch (c) {
    case MapClass::F: return "F";
    case MapClass::T_only: return "T_only";
    case MapClass::V_only: return "V_only";
  }
  return "?";
}

MapClass classify(const PLMap& x) {
  const Rational& r = x.params().r;
  bool cont = true;    // continuous on the interval
  bool circle = true;  // continuous as a circle map
  for (std::size_t i = 1; i < x.size(); ++i) {
    Rational d = x.segments()[i].left;
    Rational lim = left_limit(x, d);
    Rational val = eval(x, d);
    if (lim != val) {
      cont = false;
      if (!(lim == r && val == 0)) circle = false;
    }
  }
  if (cont) return MapClass::F;
  Rational wrap_lim = left_limit(x, r);
  Rational wrap_val = eval(x, Rational(0));
  if (wrap_lim != wrap_val && !(wrap_lim == r && wrap_val == 0)) circle = false;
  return circle ? MapClass::T_only : MapClass::V_only;
}

bool is_up(const PLMap& x) {
  // Affine pieces attain their extremes at the ends, so endpoint checks
  // (closed on the right via the same rule) are exact.
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Segment& s = x.segments()[i];
    Rational right = x.seg_right(i);
    if (s.slope * s.left + s.intercept < s.left) return false;
    if (s.slope * right + s.intercept < right) return false;
  }
  return true;
}

bool is_down(const PLMap& x) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Segment& s = x.segments()[i];
    Rational right = x.seg_right(i);
    if (s.slope * s.left + s.intercept > s.left) return false;
    if (s.slope * right + s.intercept > right) return false;
  }
  return true;
}

PLMap conjugate(const PLMap& x, const PLMap& g) { return compose(compose(inverse(g), x), g); }

PLMap commutator(const PLMap& x, const PLMap& y) {
  return compose(compose(compose(inverse(x), inverse(y)), x), y);
}

}  // namespace plg
