#pragma once

#include "selfsim/ifs.hpp"

namespace selfsim {

/// Rational enclosure [lo, hi] of the root s of sum_i ratio_i^s = 1.
struct DimensionEnclosure {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  bool contains(const Rational& s) const { return lo <= s && s <= hi; }
};

/// Bisection on s with dyadic rational midpoints. ratio^s is enclosed by
/// repeated integer square roots with outward rounding, so every sign
/// decision is exact; an exact root (e.g. s = 1/2 for ratios {1/4, 1/4}) is
/// returned as a point. Throws NonpositiveDelta when tol <= 0.
DimensionEnclosure similarity_dimension(const Ifs& ifs, const Rational& tol);

}  // namespace selfsim
