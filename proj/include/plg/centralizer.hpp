#pragma once

#include <optional>
#include <vector>

#include "plg/plmap.hpp"

namespace plg {

bool commutes(const PLMap& x, const PLMap& y);

// Right slope of y at a fixed point alpha; multiplicative in y there.
Rational slope_hom(const PLMap& y, const Rational& alpha);

// k with x = c^k, for c supported on a single interval: the slope ratio at
// inf supp(c) pins down the only candidate, then an exact comparison decides.
std::optional<long long> solve_cyclic(const PLMap& x, const PLMap& c);

enum class IntervalKind { identity, rigid };

struct PartitionInterval {
  Rational lo, hi;
  IntervalKind kind;
  // true when fix(x) meets the open interval only outside Z[1/n]; the
  // commutant over such an interval is cyclic
  bool fix_avoids_A;
};

// Cut points of a continuous x: its fixed points in (0,r) cap Z[1/n] where a
// one-sided slope differs from 1.  Anything commuting with x preserves each
// resulting interval.
struct PartitionDescriptor {
  std::vector<Rational> cut_points;  // 0 = a_0 < ... < a_k = r
  std::vector<PartitionInterval> intervals;
};

PartitionDescriptor partition(const PLMap& x);

}  // namespace plg
