#include "tamp1d/intervals.hpp"

#include <algorithm>
#include <stdexcept>

namespace tamp1d {

Interval::Interval(Rational lo_, Rational hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (!(lo < hi)) {
    throw std::invalid_argument("interval [" + to_string(lo) + ", " + to_string(hi) +
                                "] has non-positive length");
  }
}

IntervalSet::IntervalSet(std::initializer_list<Bounds> bounds)
    : IntervalSet(from_bounds(std::vector<Bounds>(bounds))) {}

IntervalSet::IntervalSet(const Interval& interval) : parts_{interval} {}

IntervalSet IntervalSet::from_bounds(std::vector<Bounds> bounds) {
  for (const auto& [lo, hi] : bounds) {
    if (lo > hi) {
      throw std::invalid_argument("reversed interval bounds [" + to_string(lo) + ", " +
                                  to_string(hi) + "]");
    }
  }
  std::erase_if(bounds, [](const Bounds& b) { return b.first == b.second; });
  std::sort(bounds.begin(), bounds.end(),
            [](const Bounds& a, const Bounds& b) { return a.first < b.first; });

  IntervalSet out;
  for (auto& [lo, hi] : bounds) {
    if (!out.parts_.empty() && lo <= out.parts_.back().hi) {
      if (hi > out.parts_.back().hi) out.parts_.back().hi = hi;
    } else {
      out.parts_.emplace_back(std::move(lo), std::move(hi));
    }
  }
  return out;
}

bool IntervalSet::contains(const Rational& x) const {
  auto it = std::upper_bound(parts_.begin(), parts_.end(), x,
                             [](const Rational& v, const Interval& i) { return v < i.lo; });
  if (it == parts_.begin()) return false;
  --it;
  return x <= it->hi;
}

bool IntervalSet::invariant() const {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (!(parts_[i].lo < parts_[i].hi)) return false;
    if (i > 0 && !(parts_[i - 1].hi < parts_[i].lo)) return false;
  }
  return true;
}

Rational measure(const IntervalSet& set) {
  Rational total = 0;
  for (const auto& part : set.parts()) total += part.length();
  return total;
}

IntervalSet boolean_combine(const IntervalSet& s, const IntervalSet& t, SetOp op) {
  // Sweep over the elementary intervals between consecutive endpoints; each
  // one lies entirely inside or outside of s and of t.
  std::vector<Rational> cuts;
  cuts.reserve(2 * (s.size() + t.size()));
  for (const auto* set : {&s, &t}) {
    for (const auto& part : set->parts()) {
      cuts.push_back(part.lo);
      cuts.push_back(part.hi);
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<IntervalSet::Bounds> kept;
  std::size_t is = 0, it = 0;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const Rational& a = cuts[k];
    const Rational& b = cuts[k + 1];
    while (is < s.size() && s.parts()[is].hi <= a) ++is;
    while (it < t.size() && t.parts()[it].hi <= a) ++it;
    bool in_s = is < s.size() && s.parts()[is].lo <= a && b <= s.parts()[is].hi;
    bool in_t = it < t.size() && t.parts()[it].lo <= a && b <= t.parts()[it].hi;
    bool keep = false;
    switch (op) {
      case SetOp::Union: keep = in_s || in_t; break;
      case SetOp::Intersection: keep = in_s && in_t; break;
      case SetOp::Difference: keep = in_s && !in_t; break;
    }
    if (keep) kept.emplace_back(a, b);
  }
  return IntervalSet::from_bounds(std::move(kept));
}

IntervalSet symdiff(const IntervalSet& s, const IntervalSet& t) {
  return boolean_combine(boolean_combine(s, t, SetOp::Difference),
                         boolean_combine(t, s, SetOp::Difference), SetOp::Union);
}

IntervalSet essential_hull(const IntervalSet& set) {
  if (set.empty()) return {};
  return IntervalSet(Interval(set.front().lo, set.back().hi));
}

IntervalSet hollows_of_set(const IntervalSet& set) {
  std::vector<IntervalSet::Bounds> gaps;
  for (std::size_t i = 1; i < set.size(); ++i) {
    gaps.emplace_back(set.parts()[i - 1].hi, set.parts()[i].lo);
  }
  return IntervalSet::from_bounds(std::move(gaps));
}

Rational measure_within(const IntervalSet& set, const Rational& lo, const Rational& hi) {
  Rational total = 0;
  for (const auto& part : set.parts()) {
    if (part.lo >= hi) break;
    const Rational& a = part.lo > lo ? part.lo : lo;
    const Rational& b = part.hi < hi ? part.hi : hi;
    if (a < b) total += b - a;
  }
  return total;
}

std::ostream& operator<<(std::ostream& os, const IntervalSet& set) {
  os << '{';
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) os << ", ";
    os << '[' << to_string(set.parts()[i].lo) << ", " << to_string(set.parts()[i].hi) << ']';
  }
  return os << '}';
}

}  // namespace tamp1d
