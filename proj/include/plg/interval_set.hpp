#pragma once

#include <utility>
#include <vector>

#include "plg/numeric.hpp"

namespace plg {

// Finite union of open intervals and isolated points, kept canonical:
// the intervals are the connected components of the interior, the points
// are what is left over.  This is enough to represent supports and fixed
// sets of maps with finitely many affine pieces (half-open pieces appear
// as an open interval plus its left endpoint).
struct IntervalSet {
  std::vector<std::pair<Rational, Rational>> intervals;  // open (a,b), a < b, sorted, disjoint
  std::vector<Rational> points;                          // sorted, outside all intervals

  bool empty() const { return intervals.empty() && points.empty(); }
  bool operator==(const IntervalSet& o) const {
    return intervals == o.intervals && points == o.points;
  }

  bool contains(const Rational& t) const;
  // true iff the whole set lies inside the open interval (lo, hi)
  bool inside_open(const Rational& lo, const Rational& hi) const;
  bool is_single_open_interval() const { return points.empty() && intervals.size() == 1; }

  // least / greatest element or limit point; set must be nonempty
  Rational inf() const;
  Rational sup() const;
};

// Accumulates raw pieces, then canonicalizes.
class IntervalSetBuilder {
 public:
  void add_open(const Rational& a, const Rational& b);  // ignored when a >= b
  void add_point(const Rational& p);
  void add_half_open(const Rational& a, const Rational& b);  // [a, b)
  void add_set(const IntervalSet& s);
  IntervalSet finish();

 private:
  std::vector<std::pair<Rational, Rational>> intervals_;
  std::vector<Rational> points_;
};

bool disjoint(const IntervalSet& a, const IntervalSet& b);
IntervalSet unite(const IntervalSet& a, const IntervalSet& b);
// complement of s within [0, r)
IntervalSet complement_in(const IntervalSet& s, const Rational& r);
std::string interval_set_str(const IntervalSet& s);

}  // namespace plg
