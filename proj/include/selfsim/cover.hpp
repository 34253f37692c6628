#pragma once

#include <cstdint>
#include <vector>

#include "selfsim/ifs.hpp"
#include "selfsim/interval_set.hpp"

namespace selfsim {

inline constexpr std::uint64_t kDefaultCylinderBudget = 1'000'000;
inline constexpr int kDefaultCoverDepth = 10;

/// Union of phi_w(hull) over all words of length `depth`.
struct CoverReport {
  int depth = 0;
  IntervalSet cover;
  std::size_t piece_count = 0;
  Rational largest_gap;
};

/// Throws BudgetExceeded when m^n exceeds the cylinder budget.
CoverReport cover(const Ifs& ifs, int n, std::uint64_t budget = kDefaultCylinderBudget);

/// cover(ifs, k).cover for k = 0..n, computed in one pass.
std::vector<IntervalSet> cover_levels(const Ifs& ifs, int n, std::uint64_t budget = kDefaultCylinderBudget);

/// Sorted, deduplicated images of the maps' fixed points under all words of
/// length <= d. Every returned point lies in the attractor.
std::vector<Rational> exact_points(const Ifs& ifs, int d, std::uint64_t budget = kDefaultCylinderBudget);

/// Exact largest gap of the attractor for family-tagged IFSs.
/// Throws UntaggedFamily for generic ones.
Rational family_gap(const Ifs& ifs);

/// largest_gap(cover(ifs, n)) == family_gap(ifs).
bool stable_gap_check(const Ifs& ifs, int n, std::uint64_t budget = kDefaultCylinderBudget);

}  // namespace selfsim
