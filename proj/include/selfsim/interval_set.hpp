#pragma once

#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "selfsim/rational.hpp"

namespace selfsim {

/// Closed interval [lo, hi]; a point interval (lo == hi) is allowed.
struct Interval {
  Rational lo;
  Rational hi;

  Interval() = default;
  Interval(Rational lo_, Rational hi_);

  Rational length() const { return hi - lo; }
  bool contains(const Rational& p) const { return lo <= p && p <= hi; }
  bool contains(const Interval& other) const { return lo <= other.lo && other.hi <= hi; }
  bool is_point() const { return lo == hi; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Open interval (lo, hi): a bounded component of the complement of a set
/// inside its convex hull.
struct Gap {
  Rational lo;
  Rational hi;

  Rational length() const { return hi - lo; }
  bool contains(const Rational& p) const { return lo < p && p < hi; }

  friend bool operator==(const Gap&, const Gap&) = default;
};

/// Finite union of closed intervals in canonical form: parts sorted by lo,
/// pairwise disjoint, and never touching (touching parts are merged).
class IntervalSet {
 public:
  IntervalSet() = default;
  IntervalSet(std::initializer_list<Interval> parts);

  /// Canonicalizes an arbitrary (unsorted, overlapping) list of intervals.
  static IntervalSet from_parts(std::vector<Interval> parts);

  std::span<const Interval> parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  std::size_t size() const { return parts_.size(); }

  /// Conv(s). Throws EmptySet.
  Interval hull() const;

  /// Image under x -> scale * x + shift; scale may be negative or zero.
  IntervalSet affine_image(const Rational& scale, const Rational& shift) const;
  IntervalSet translated(const Rational& shift) const { return affine_image(Rational(1), shift); }

  /// Parts that meet the closed window [lo, hi], in order.
  std::span<const Interval> window(const Rational& lo, const Rational& hi) const;

  /// The bounded gap of this set strictly containing p, if any.
  std::optional<Gap> gap_containing(const Rational& p) const;

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  std::vector<Interval> parts_;
};

IntervalSet unite(const IntervalSet& a, const IntervalSet& b);
IntervalSet intersect(const IntervalSet& a, const IntervalSet& b);
bool includes(const IntervalSet& outer, const IntervalSet& inner);
bool contains_point(const IntervalSet& s, const Rational& p);

/// Bounded open components of Conv(s) \ s, left to right. Throws EmptySet.
std::vector<Gap> gaps(const IntervalSet& s);

/// Largest gap length; 0 for a single interval. Throws EmptySet.
Rational largest_gap(const IntervalSet& s);

/// inf |x - y| over x in a, y in b. Throws EmptySet.
Rational dist(const IntervalSet& a, const IntervalSet& b);

/// The open delta-neighborhood of a set. Components are open intervals;
/// two of them merge only when they overlap, so neighborhoods that merely
/// touch stay separate.
struct Neighborhood {
  std::vector<Interval> components;

  bool is_interval() const { return components.size() == 1; }
  IntervalSet closure() const { return IntervalSet::from_parts(components); }
};

/// Throws NonpositiveDelta when delta <= 0, EmptySet for an empty set.
Neighborhood neighborhood(const IntervalSet& s, const Rational& delta);

std::ostream& operator<<(std::ostream& os, const Interval& i);
std::ostream& operator<<(std::ostream& os, const Gap& g);
std::ostream& operator<<(std::ostream& os, const IntervalSet& s);

}  // namespace selfsim
