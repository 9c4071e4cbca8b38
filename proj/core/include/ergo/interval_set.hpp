#pragma once

#include <utility>
#include <vector>

#include "ergo/rational.hpp"

namespace ergo {

/// Half-open interval [lo, hi) with rational endpoints inside [0, 1].
struct Interval {
  Rational lo;
  Rational hi;

  Rational length() const { return hi - lo; }
  bool operator==(const Interval&) const = default;
};

/// A finite union of half-open subintervals of [0,1) in canonical form:
/// sorted by left endpoint, pairwise disjoint, adjacent parts merged.
///
/// Half-open canonical forms make every boundary-overlap test exact and
/// remove measure-zero ambiguity: two sets agree up to null sets exactly
/// when their canonical forms are equal.
class IntervalSet {
 public:
  IntervalSet() = default;

  /// Canonicalizes an arbitrary list of [a,b) pairs.
  /// Throws MalformedInterval when a >= b or an endpoint leaves [0,1].
  static IntervalSet from_raw(const std::vector<std::pair<Rational, Rational>>& raw);

  /// Builds directly from already-validated parts (still canonicalizes).
  static IntervalSet from_intervals(std::vector<Interval> parts);

  static IntervalSet full() { return from_intervals({{Rational(0), Rational(1)}}); }

  const std::vector<Interval>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  Rational measure() const;

  IntervalSet complement() const;
  bool contains_point(const Rational& x) const;

  bool operator==(const IntervalSet&) const = default;

 private:
  std::vector<Interval> parts_;
};

IntervalSet set_union(const IntervalSet& a, const IntervalSet& b);
IntervalSet set_intersect(const IntervalSet& a, const IntervalSet& b);
IntervalSet set_difference(const IntervalSet& a, const IntervalSet& b);
IntervalSet set_symdiff(const IntervalSet& a, const IntervalSet& b);

inline bool is_subset(const IntervalSet& a, const IntervalSet& b) {
  return set_difference(a, b).empty();
}

}  // namespace ergo
