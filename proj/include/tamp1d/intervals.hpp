#pragma once

#include <initializer_list>
#include <ostream>
#include <utility>
#include <vector>

#include "tamp1d/rational.hpp"

namespace tamp1d {

/// A bounded interval of the half-line with positive length. Open/closed
/// endpoints are not tracked: sets are only meaningful up to null sets.
struct Interval {
  Rational lo;
  Rational hi;

  Interval(Rational lo_, Rational hi_);

  Rational length() const { return hi - lo; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Finite union of intervals kept in canonical form: parts sorted, pairwise
/// disjoint, separated by gaps of positive length. Degenerate inputs are
/// dropped and touching inputs merged on construction.
class IntervalSet {
 public:
  using Bounds = std::pair<Rational, Rational>;

  IntervalSet() = default;
  IntervalSet(std::initializer_list<Bounds> bounds);
  explicit IntervalSet(const Interval& interval);

  /// Accepts any list of (lo, hi) with lo <= hi; throws if some lo > hi.
  static IntervalSet from_bounds(std::vector<Bounds> bounds);

  const std::vector<Interval>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  std::size_t size() const { return parts_.size(); }
  const Interval& front() const { return parts_.front(); }
  const Interval& back() const { return parts_.back(); }

  /// Membership in the closure of the set.
  bool contains(const Rational& x) const;

  /// Checks the canonical-form invariants (used by property tests).
  bool invariant() const;

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  std::vector<Interval> parts_;
};

enum class SetOp { Union, Intersection, Difference };

Rational measure(const IntervalSet& set);

IntervalSet boolean_combine(const IntervalSet& s, const IntervalSet& t, SetOp op);

IntervalSet symdiff(const IntervalSet& s, const IntervalSet& t);

/// Empty, or the single interval [min lo, max hi].
IntervalSet essential_hull(const IntervalSet& set);

/// Gaps of the set inside its essential hull.
IntervalSet hollows_of_set(const IntervalSet& set);

/// Measure of set ∩ [lo, hi].
Rational measure_within(const IntervalSet& set, const Rational& lo, const Rational& hi);

std::ostream& operator<<(std::ostream& os, const IntervalSet& set);

}  // namespace tamp1d
