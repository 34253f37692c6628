#include "selfsim/interval_set.hpp"

#include <algorithm>

namespace selfsim {

Interval::Interval(Rational lo_, Rational hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (hi < lo) throw Error(ErrorKind::ParameterOutOfRange, "interval with lo > hi: [" + lo.str() + ", " + hi.str() + "]");
}

IntervalSet::IntervalSet(std::initializer_list<Interval> parts)
    : IntervalSet(from_parts(std::vector<Interval>(parts))) {}

IntervalSet IntervalSet::from_parts(std::vector<Interval> parts) {
  std::sort(parts.begin(), parts.end(), [](const Interval& a, const Interval& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.hi < b.hi;
  });
  IntervalSet out;
  out.parts_.reserve(parts.size());
  for (auto& part : parts) {
    if (!out.parts_.empty() && part.lo <= out.parts_.back().hi) {
      if (out.parts_.back().hi < part.hi) out.parts_.back().hi = std::move(part.hi);
    } else {
      out.parts_.push_back(std::move(part));
    }
  }
  return out;
}

Interval IntervalSet::hull() const {
  if (parts_.empty()) throw Error(ErrorKind::EmptySet, "hull of the empty set");
  return Interval(parts_.front().lo, parts_.back().hi);
}

IntervalSet IntervalSet::affine_image(const Rational& scale, const Rational& shift) const {
  std::vector<Interval> out;
  out.reserve(parts_.size());
  const bool flips = scale.sign() < 0;
  for (const auto& p : parts_) {
    Rational a = scale * p.lo + shift;
    Rational b = scale * p.hi + shift;
    out.push_back(flips ? Interval(std::move(b), std::move(a)) : Interval(std::move(a), std::move(b)));
  }
  if (flips) std::reverse(out.begin(), out.end());
  if (scale.is_zero()) return from_parts(std::move(out));
  IntervalSet result;
  result.parts_ = std::move(out);
  return result;
}

std::span<const Interval> IntervalSet::window(const Rational& lo, const Rational& hi) const {
  // first part whose hi >= lo
  auto first = std::partition_point(parts_.begin(), parts_.end(), [&](const Interval& p) { return p.hi < lo; });
  // first part whose lo > hi
  auto last = std::partition_point(first, parts_.end(), [&](const Interval& p) { return p.lo <= hi; });
  return {first, last};
}

std::optional<Gap> IntervalSet::gap_containing(const Rational& p) const {
  auto next = std::partition_point(parts_.begin(), parts_.end(), [&](const Interval& part) { return part.hi < p; });
  if (next == parts_.begin() || next == parts_.end()) return std::nullopt;
  if (next->lo <= p) return std::nullopt;
  return Gap{std::prev(next)->hi, next->lo};
}

IntervalSet unite(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> all(a.parts().begin(), a.parts().end());
  all.insert(all.end(), b.parts().begin(), b.parts().end());
  return IntervalSet::from_parts(std::move(all));
}

IntervalSet intersect(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> out;
  auto pa = a.parts();
  auto pb = b.parts();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < pa.size() && j < pb.size()) {
    const Rational& lo = max(pa[i].lo, pb[j].lo);
    const Rational& hi = min(pa[i].hi, pb[j].hi);
    if (lo <= hi) out.emplace_back(lo, hi);
    if (pa[i].hi < pb[j].hi) {
      ++i;
    } else {
      ++j;
    }
  }
  // Pieces from distinct parts of a canonical operand never touch, but a
  // point piece can coincide with a neighbour's endpoint; from_parts merges.
  return IntervalSet::from_parts(std::move(out));
}

bool includes(const IntervalSet& outer, const IntervalSet& inner) {
  for (const auto& part : inner.parts()) {
    auto hits = outer.window(part.lo, part.lo);
    if (hits.empty() || !hits.front().contains(part)) return false;
  }
  return true;
}

bool contains_point(const IntervalSet& s, const Rational& p) { return !s.window(p, p).empty(); }

std::vector<Gap> gaps(const IntervalSet& s) {
  if (s.empty()) throw Error(ErrorKind::EmptySet, "gaps of the empty set");
  std::vector<Gap> out;
  auto parts = s.parts();
  for (std::size_t i = 1; i < parts.size(); ++i) out.push_back(Gap{parts[i - 1].hi, parts[i].lo});
  return out;
}

Rational largest_gap(const IntervalSet& s) {
  Rational best(0);
  for (const auto& g : gaps(s)) best = max(best, g.length());
  return best;
}

Rational dist(const IntervalSet& a, const IntervalSet& b) {
  if (a.empty() || b.empty()) throw Error(ErrorKind::EmptySet, "dist with an empty operand");
  auto pa = a.parts();
  auto pb = b.parts();
  std::optional<Rational> best;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < pa.size() && j < pb.size()) {
    Rational d(0);
    if (pa[i].hi < pb[j].lo) {
      d = pb[j].lo - pa[i].hi;
    } else if (pb[j].hi < pa[i].lo) {
      d = pa[i].lo - pb[j].hi;
    }
    if (!best || d < *best) best = d;
    if (best->is_zero()) break;
    if (pa[i].hi < pb[j].hi) {
      ++i;
    } else {
      ++j;
    }
  }
  return *best;
}

Neighborhood neighborhood(const IntervalSet& s, const Rational& delta) {
  if (delta.sign() <= 0) throw Error(ErrorKind::NonpositiveDelta, "delta = " + delta.str());
  if (s.empty()) throw Error(ErrorKind::EmptySet, "neighborhood of the empty set");
  Neighborhood out;
  for (const auto& part : s.parts()) {
    Rational lo = part.lo - delta;
    Rational hi = part.hi + delta;
    if (!out.components.empty() && lo < out.components.back().hi) {
      out.components.back().hi = std::move(hi);
    } else {
      out.components.emplace_back(std::move(lo), std::move(hi));
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Interval& i) { return os << "[" << i.lo << ", " << i.hi << "]"; }

std::ostream& operator<<(std::ostream& os, const Gap& g) { return os << "(" << g.lo << ", " << g.hi << ")"; }

std::ostream& operator<<(std::ostream& os, const IntervalSet& s) {
  os << "{";
  bool first = true;
  for (const auto& p : s.parts()) {
    if (!first) os << ", ";
    os << p;
    first = false;
  }
  return os << "}";
}

}  // namespace selfsim
