#pragma once

#include <cstddef>
#include <vector>

#include "plg/interval_set.hpp"
#include "plg/numeric.hpp"

namespace plg {

// One affine piece t -> slope*t + intercept on [left, next left).
struct Segment {
  Rational left;
  Rational slope;
  Rational intercept;

  bool operator==(const Segment& o) const {
    return left == o.left && slope == o.slope && intercept == o.intercept;
  }
};

// Piecewise-affine right-continuous bijection of [0, r), slopes powers of n,
// breakpoints and their images in Z[1/n].  Stored canonically: domain-ordered
// segments, no two adjacent pieces with the same affine rule.  Group law is
// the right action: (t)(xy) = ((t)x)y, i.e. compose(x, y) applies x first.
class PLMap {
 public:
  // Validates everything: breakpoints in A, slopes in the cyclic slope group,
  // image intervals exactly tiling [0, r).  Canonicalizes on success.
  static PLMap make(const GroupParams& params, std::vector<Segment> segments);

  const GroupParams& params() const { return params_; }
  const std::vector<Segment>& segments() const { return segments_; }
  std::size_t size() const { return segments_.size(); }

  // right endpoint of segment i (next left, or r for the last piece)
  Rational seg_right(std::size_t i) const;
  // index of the segment whose half-open piece contains t, 0 <= t < r
  std::size_t seg_index_at(const Rational& t) const;
  // index of the segment immediately left of t, 0 < t <= r
  std::size_t seg_index_left_of(const Rational& t) const;

 private:
  PLMap(GroupParams params, std::vector<Segment> segments);

  GroupParams params_;
  std::vector<Segment> segments_;
};

PLMap identity_map(const GroupParams& params);
bool is_identity(const PLMap& x);

Rational eval(const PLMap& x, const Rational& t);
// the limit of (u)x as u -> t from below, 0 < t <= r
Rational left_limit(const PLMap& x, const Rational& t);
// unique t with (t)x = e
Rational preimage(const PLMap& x, const Rational& e);

PLMap compose(const PLMap& x, const PLMap& y);
PLMap compose(const std::vector<PLMap>& factors);
PLMap inverse(const PLMap& x);
PLMap power(const PLMap& x, long long k);
bool equals(const PLMap& x, const PLMap& y);

IntervalSet support(const PLMap& x);
IntervalSet fixed_set(const PLMap& x);
// exact image of a set under x
IntervalSet image_set(const IntervalSet& s, const PLMap& x);

Rational slope_right(const PLMap& x, const Rational& t);  // 0 <= t < r
Rational slope_left(const PLMap& x, const Rational& t);   // 0 < t <= r

enum class MapClass { F, T_only, V_only };
const char* map_class_name(MapClass c);

// F: continuous on [0, r); T_only: continuous as a circle map but not on the
// interval; V_only: neither.
MapClass classify(const PLMap& x);

bool is_up(const PLMap& x);    // (t)x >= t everywhere
bool is_down(const PLMap& x);  // (t)x <= t everywhere

PLMap conjugate(const PLMap& x, const PLMap& g);   // g^-1 x g
PLMap commutator(const PLMap& x, const PLMap& y);  // x^-1 y^-1 x y

}  // namespace plg
