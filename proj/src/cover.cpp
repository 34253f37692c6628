#include "selfsim/cover.hpp"

#include <algorithm>
#include <string>

namespace selfsim {

namespace {

void check_budget(int m, int levels, std::uint64_t budget, int requested) {
  std::uint64_t count = 1;
  for (int i = 0; i < levels; ++i) {
    if (count > budget / static_cast<std::uint64_t>(m)) {
      count = budget + 1;
      break;
    }
    count *= static_cast<std::uint64_t>(m);
  }
  if (count > budget) {
    throw Error(ErrorKind::BudgetExceeded,
                "depth " + std::to_string(requested) + " needs " + std::to_string(m) + "^" + std::to_string(levels) +
                    " cylinders, budget " + std::to_string(budget));
  }
}

IntervalSet refine(const Ifs& ifs, const IntervalSet& level) {
  std::vector<Interval> parts;
  parts.reserve(level.size() * ifs.maps().size());
  for (const auto& f : ifs.maps()) {
    for (const auto& p : level.parts()) parts.push_back(f(p));
  }
  return IntervalSet::from_parts(std::move(parts));
}

}  // namespace

std::vector<IntervalSet> cover_levels(const Ifs& ifs, int n, std::uint64_t budget) {
  if (n < 0) throw Error(ErrorKind::ParameterOutOfRange, "cover depth must be >= 0");
  check_budget(ifs.size(), n, budget, n);
  std::vector<IntervalSet> levels;
  levels.reserve(static_cast<std::size_t>(n) + 1);
  levels.push_back(IntervalSet{ifs.hull()});
  for (int k = 1; k <= n; ++k) levels.push_back(refine(ifs, levels.back()));
  return levels;
}

CoverReport cover(const Ifs& ifs, int n, std::uint64_t budget) {
  auto levels = cover_levels(ifs, n, budget);
  CoverReport report;
  report.depth = n;
  report.cover = std::move(levels.back());
  report.piece_count = report.cover.size();
  report.largest_gap = largest_gap(report.cover);
  return report;
}

std::vector<Rational> exact_points(const Ifs& ifs, int d, std::uint64_t budget) {
  if (d < 0) throw Error(ErrorKind::ParameterOutOfRange, "point depth must be >= 0");
  check_budget(ifs.size(), d + 1, budget, d);
  std::vector<Rational> points;
  for (const auto& f : ifs.maps()) points.push_back(f.fixed_point());
  auto normalize = [](std::vector<Rational>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  normalize(points);
  std::vector<Rational> frontier = points;
  for (int k = 1; k <= d; ++k) {
    std::vector<Rational> next;
    next.reserve(frontier.size() * ifs.maps().size());
    for (const auto& f : ifs.maps()) {
      for (const auto& p : frontier) next.push_back(f(p));
    }
    normalize(next);
    std::vector<Rational> merged;
    merged.reserve(points.size() + next.size());
    std::set_union(points.begin(), points.end(), next.begin(), next.end(), std::back_inserter(merged));
    points = std::move(merged);
    frontier = std::move(next);
  }
  return points;
}

Rational family_gap(const Ifs& ifs) {
  struct Visitor {
    const Ifs& ifs;
    Rational operator()(const GenericFamily&) const {
      throw Error(ErrorKind::UntaggedFamily, "family_gap needs a family tag; use largest_gap of a cover");
    }
    Rational operator()(const ThreeMapFamily& f) const {
      // Level-1 gaps are (rho, lambda) and (lambda + rho, 1 - rho); every
      // other gap is a scaled copy of one of them.
      return max(f.lambda - f.rho, Rational(1) - f.rho - f.rho - f.lambda);
    }
    Rational operator()(const EqualGapFamily& f) const { return equal_gap_gamma(f.ratios); }
    Rational operator()(const TwoMapFamily& f) const { return Rational(1) - f.alpha - f.beta; }
    Rational operator()(const GridFamily& f) const {
      return (Rational(1) - Rational(f.m) * f.beta) / Rational(f.m - 1);
    }
    Rational operator()(const FourMapExampleFamily&) const {
      // No closed form is stated for this set. Level-1 cylinders are disjoint,
      // so the depth-1 gaps persist unchanged; read the value off depth 2 and
      // require it to agree with depth 1.
      auto levels = cover_levels(ifs, 2);
      Rational g1 = largest_gap(levels[1]);
      Rational g2 = largest_gap(levels[2]);
      if (g1 != g2) throw Error(ErrorKind::HypothesisViolated, "four-map gap not stable between depths 1 and 2");
      return g2;
    }
  };
  return std::visit(Visitor{ifs}, ifs.family());
}

bool stable_gap_check(const Ifs& ifs, int n, std::uint64_t budget) {
  if (n < 1) throw Error(ErrorKind::ParameterOutOfRange, "stable_gap_check needs n >= 1");
  return cover(ifs, n, budget).largest_gap == family_gap(ifs);
}

}  // namespace selfsim
