#include "plg/interval_set.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace plg {

bool IntervalSet::contains(const Rational& t) const {
  for (const auto& iv : intervals)
    if (iv.first < t && t < iv.second) return true;
  return std::binary_search(points.begin(), points.end(), t);
}

bool IntervalSet::inside_open(const Rational& lo, const Rational& hi) const {
  for (const auto& iv : intervals)
    if (iv.first < lo || iv.second > hi) return false;
  for (const auto& p : points)
    if (p <= lo || p >= hi) return false;
  return true;
}

Rational IntervalSet::inf() const {
  if (empty()) throw Error(Err::OutOfRange, "inf of empty set");
  if (intervals.empty()) return points.front();
  if (points.empty()) return intervals.front().first;
  return std::min(points.front(), intervals.front().first);
}

Rational IntervalSet::sup() const {
  if (empty()) throw Error(Err::OutOfRange, "sup of empty set");
  if (intervals.empty()) return points.back();
  if (points.empty()) return intervals.back().second;
  return std::max(points.back(), intervals.back().second);
}

void IntervalSetBuilder::add_open(const Rational& a, const Rational& b) {
  if (a < b) intervals_.emplace_back(a, b);
}

void IntervalSetBuilder::add_point(const Rational& p) { points_.push_back(p); }

void IntervalSetBuilder::add_half_open(const Rational& a, const Rational& b) {
  if (a < b) {
    intervals_.emplace_back(a, b);
    points_.push_back(a);
  }
}

void IntervalSetBuilder::add_set(const IntervalSet& s) {
  for (const auto& iv : s.intervals) intervals_.emplace_back(iv);
  for (const auto& p : s.points) points_.push_back(p);
}

IntervalSet IntervalSetBuilder::finish() {
  std::sort(intervals_.begin(), intervals_.end());
  std::set<Rational> pts(points_.begin(), points_.end());

  // Merge overlapping intervals; a shared endpoint merges only when that
  // point is itself present, which makes it interior.
  std::vector<std::pair<Rational, Rational>> merged;
  for (const auto& iv : intervals_) {
    if (merged.empty()) {
      merged.push_back(iv);
      continue;
    }
    auto& cur = merged.back();
    if (iv.first < cur.second) {
      cur.second = std::max(cur.second, iv.second);
    } else if (iv.first == cur.second && pts.count(cur.second)) {
      pts.erase(cur.second);
      cur.second = std::max(cur.second, iv.second);
    } else {
      merged.push_back(iv);
    }
  }

  IntervalSet out;
  out.intervals = std::move(merged);
  for (const auto& p : pts) {
    bool interior = false;
    for (const auto& iv : out.intervals)
      if (iv.first < p && p < iv.second) {
        interior = true;
        break;
      }
    if (!interior) out.points.push_back(p);
  }
  intervals_.clear();
  points_.clear();
  return out;
}

bool disjoint(const IntervalSet& a, const IntervalSet& b) {
  // Exact: any overlap of two canonical sets shows up either at a point of
  // one set lying in the other, or as overlapping open intervals.
  for (const auto& p : a.points)
    if (b.contains(p)) return false;
  for (const auto& p : b.points)
    if (a.contains(p)) return false;
  for (const auto& x : a.intervals)
    for (const auto& y : b.intervals)
      if (x.first < y.second && y.first < x.second) return false;
  return true;
}

IntervalSet unite(const IntervalSet& a, const IntervalSet& b) {
  IntervalSetBuilder bld;
  bld.add_set(a);
  bld.add_set(b);
  return bld.finish();
}

IntervalSet complement_in(const IntervalSet& s, const Rational& r) {
  // Refine [0, r) by every boundary of s, then keep the gaps and boundary
  // points that s misses.
  std::set<Rational> cuts;
  cuts.insert(Rational(0));
  cuts.insert(r);
  for (const auto& iv : s.intervals) {
    if (iv.first > 0 && iv.first < r) cuts.insert(iv.first);
    if (iv.second > 0 && iv.second < r) cuts.insert(iv.second);
  }
  for (const auto& p : s.points)
    if (p >= 0 && p < r) cuts.insert(p);

  std::vector<Rational> grid(cuts.begin(), cuts.end());
  IntervalSetBuilder bld;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    Rational mid = (grid[i] + grid[i + 1]) / 2;
    if (!s.contains(mid)) bld.add_open(grid[i], grid[i + 1]);
    if (!s.contains(grid[i])) bld.add_point(grid[i]);
  }
  return bld.finish();
}

std::string interval_set_str(const IntervalSet& s) {
  if (s.empty()) return "empty";
  std::ostringstream os;
  bool first = true;
  std::size_t ii = 0, pi = 0;
  // emit in left-to-right order
  while (ii < s.intervals.size() || pi < s.points.size()) {
    bool take_point = pi < s.points.size() &&
                      (ii >= s.intervals.size() || s.points[pi] < s.intervals[ii].first);
    if (!first) os << " u ";
    if (take_point) {
      os << "{" << s.points[pi] << "}";
      ++pi;
    } else {
      os << "(" << s.intervals[ii].first << "," << s.intervals[ii].second << ")";
      ++ii;
    }
    first = false;
  }
  return os.str();
}

}  // namespace plg
