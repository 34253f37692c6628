#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "selfsim/interval_set.hpp"
#include "selfsim/similitude.hpp"

namespace selfsim {

// Family tags. Each records the constructor parameters so downstream code
// can use exact closed forms instead of depth-limited estimates.
struct GenericFamily {
  friend bool operator==(const GenericFamily&, const GenericFamily&) = default;
};
struct ThreeMapFamily {
  Rational rho;
  Rational lambda;
  friend bool operator==(const ThreeMapFamily&, const ThreeMapFamily&) = default;
};
struct EqualGapFamily {
  std::vector<Rational> ratios;
  friend bool operator==(const EqualGapFamily&, const EqualGapFamily&) = default;
};
struct TwoMapFamily {
  Rational alpha;
  Rational beta;
  friend bool operator==(const TwoMapFamily&, const TwoMapFamily&) = default;
};
struct GridFamily {
  Rational beta;
  int m = 2;
  friend bool operator==(const GridFamily&, const GridFamily&) = default;
};
struct FourMapExampleFamily {
  friend bool operator==(const FourMapExampleFamily&, const FourMapExampleFamily&) = default;
};

using Family = std::variant<GenericFamily, ThreeMapFamily, EqualGapFamily, TwoMapFamily, GridFamily, FourMapExampleFamily>;

/// Short stable name: "generic", "three-map", "equal-gap", "two-map", "grid", "four-map".
std::string family_name(const Family& family);

/// Ordered list of contractive similitudes with ratios in (0, 1), the hull
/// [min fixed point, max fixed point] of the attractor, and a family tag.
class Ifs {
 public:
  /// Throws ParameterOutOfRange unless m >= 2, every ratio lies in (0, 1)
  /// and the maps do not all share one fixed point.
  explicit Ifs(std::vector<Similitude> maps, Family family = GenericFamily{});

  const std::vector<Similitude>& maps() const { return maps_; }
  const Similitude& map(int letter) const { return maps_.at(static_cast<std::size_t>(letter - 1)); }
  int size() const { return static_cast<int>(maps_.size()); }
  const Interval& hull() const { return hull_; }
  const Family& family() const { return family_; }
  bool is_tagged() const { return !std::holds_alternative<GenericFamily>(family_); }
  bool is_homogeneous() const;

  friend bool operator==(const Ifs&, const Ifs&) = default;

 private:
  std::vector<Similitude> maps_;
  Interval hull_;
  Family family_;
};

/// {rho x, rho x + lambda, rho x + 1 - rho}; 0 < rho < 1/3, rho <= lambda <= 1 - 2 rho.
Ifs three_map(const Rational& rho, const Rational& lambda);

/// phi_i(x) = rho_i x + sum_{k<i} rho_k + (i - 1) gamma with gamma = (1 - sum rho) / (m - 1).
Ifs equal_gap(const std::vector<Rational>& ratios);

/// The common level-1 gap length of an equal-gap ratio list.
Rational equal_gap_gamma(const std::vector<Rational>& ratios);

/// {alpha x, beta x + 1 - beta}; alpha, beta > 0, alpha + beta < 1.
Ifs two_map(const Rational& alpha, const Rational& beta);

/// phi_i(x) = beta x + (i - 1)(1 - beta) / (m - 1); m >= 2, 0 < beta < 1/m.
Ifs homogeneous_grid(const Rational& beta, int m);

/// {x/10, (x+1)/10, (x+5)/10, (x+6)/10}.
Ifs four_map_example();

/// phi_{w_1} o ... o phi_{w_n}; identity for the empty word. Throws AlphabetMismatch.
Similitude word_map(const Ifs& ifs, const Word& w);

struct Mirrored {
  Ifs ifs;
  Similitude sigma;
};

/// The IFS generating sigma(K), sigma(x) = hull.lo + hull.hi - x. Map j of
/// the result is sigma o phi_{m+1-j} o sigma, so left-to-right order is kept
/// and word_map(mirrored, mirror_word(w)) = sigma o word_map(ifs, w) o sigma.
Mirrored mirror(const Ifs& ifs);

struct SymmetricCertified {
  Rational center;
};
/// point lies in K; its reflection lies strictly inside a gap (or outside the
/// hull, in which case gap is empty) of the depth-`depth` cover.
struct AsymmetricWitness {
  Rational point;
  Rational reflected;
  std::optional<Gap> gap;
  int depth = 0;
};
struct SymmetryUnknown {
  int depth = 0;
};
using SymmetryVerdict = std::variant<SymmetricCertified, AsymmetricWitness, SymmetryUnknown>;

/// Certifies symmetry algebraically (the reflected map set equals the map
/// set) or refutes it with a certified point at depth <= `depth`.
SymmetryVerdict is_symmetric(const Ifs& ifs, int depth);

/// Center of the algebraic symmetry, if the reflected map set equals the map set.
std::optional<Rational> symmetry_center(const Ifs& ifs);

std::ostream& operator<<(std::ostream& os, const Ifs& ifs);

}  // namespace selfsim
