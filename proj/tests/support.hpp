#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "selfsim/interval_set.hpp"

namespace selfsim::testing {

inline Rational q(long p, long d = 1) { return Rational(p, d); }

/// Every fraction p/d in [0, 1] with d <= max_den, sorted and deduplicated.
inline std::vector<Rational> farey(long max_den) {
  std::vector<Rational> out;
  for (long d = 1; d <= max_den; ++d) {
    for (long p = 0; p <= d; ++p) out.emplace_back(p, d);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// {0, 1/d, ..., 1}.
inline std::vector<Rational> uniform(long d) {
  std::vector<Rational> out;
  for (long p = 0; p <= d; ++p) out.emplace_back(p, d);
  return out;
}

/// Every canonical IntervalSet with at most max_parts parts whose endpoints
/// lie in grid. Parts may be points; consecutive parts never touch.
inline std::vector<IntervalSet> all_sets(const std::vector<Rational>& grid, std::size_t max_parts) {
  std::vector<IntervalSet> out;
  std::vector<Interval> parts;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    out.push_back(IntervalSet::from_parts(parts));
    if (parts.size() == max_parts) return;
    for (std::size_t i = start; i < grid.size(); ++i) {
      for (std::size_t j = i; j < grid.size(); ++j) {
        parts.emplace_back(grid[i], grid[j]);
        self(self, j + 1);
        parts.pop_back();
      }
    }
  };
  rec(rec, 0);
  return out;
}

/// Random canonical set with up to max_parts parts, endpoints from grid.
inline IntervalSet random_set(std::mt19937& rng, const std::vector<Rational>& grid, std::size_t max_parts) {
  std::uniform_int_distribution<std::size_t> count(0, max_parts);
  std::uniform_int_distribution<std::size_t> pick(0, grid.size() - 1);
  std::vector<Interval> parts;
  const std::size_t n = count(rng);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t a = pick(rng);
    std::size_t b = pick(rng);
    if (b < a) std::swap(a, b);
    parts.emplace_back(grid[a], grid[b]);
  }
  return IntervalSet::from_parts(std::move(parts));
}

/// Two neighborhoods, given as open components, share a point.
inline bool open_sets_meet(const Neighborhood& a, const Neighborhood& b) {
  for (const auto& x : a.components) {
    for (const auto& y : b.components) {
      if (max(x.lo, y.lo) < min(x.hi, y.hi)) return true;
    }
  }
  return false;
}

/// Radii for threshold sweeps around t: a coarse grid plus values just
/// below, at and just above t.
inline std::vector<Rational> sweep_around(const Rational& t) {
  std::vector<Rational> out;
  for (long j = 1; j <= 24; ++j) out.emplace_back(j, 16);
  for (const Rational& eps : {Rational(1, 1000), Rational(1, 1000000)}) {
    out.push_back(t + eps);
    out.push_back(t - eps);
  }
  out.push_back(t);
  out.push_back(t / Rational(2));
  out.push_back(t * Rational(2));
  std::erase_if(out, [](const Rational& d) { return d.sign() <= 0; });
  return out;
}

/// For every swept delta > 0: the delta/2-neighborhoods of a and b meet
/// exactly when delta > dist(a, b).
inline bool dist_sweep_holds(const IntervalSet& a, const IntervalSet& b) {
  const Rational d = dist(a, b);
  const Rational two(2);
  for (const auto& delta : sweep_around(d)) {
    const bool meet = open_sets_meet(neighborhood(a, delta / two), neighborhood(b, delta / two));
    if (meet != (delta > d)) return false;
  }
  return true;
}

/// For every swept delta > 0: the delta/2-neighborhood of s is a single
/// interval exactly when delta > largest_gap(s).
inline bool gap_sweep_holds(const IntervalSet& s) {
  const Rational g = largest_gap(s);
  const Rational two(2);
  for (const auto& delta : sweep_around(g)) {
    if (neighborhood(s, delta / two).is_interval() != (delta > g)) return false;
  }
  return true;
}

/// Canonical form: sorted, disjoint and non-touching.
inline bool is_canonical(const IntervalSet& s) {
  const auto parts = s.parts();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (!(parts[i - 1].hi < parts[i].lo)) return false;
  }
  return true;
}

}  // namespace selfsim::testing
