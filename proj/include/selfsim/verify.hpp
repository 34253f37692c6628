#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "selfsim/embedding.hpp"

namespace selfsim {

enum class TheoremId {
  ThreeMapWords,      // asymmetric three-map sets: embeddings are word maps
  ThreeMapSymmetric,  // lambda = (1 - rho)/2: word maps and reflected word maps
  EqualGap,           // equal-gap sets: reflections iff the ratio list is a palindrome
  TwoMap,             // two maps, distinct ratios: word maps only
  Grid,               // homogeneous grid: word maps and reflected word maps
  FourMapExample,     // extra generators g1, g2 beyond the word maps
};

std::string to_string(TheoremId id);
/// Accepts the family-level names used by --only: three-map, equal-gap,
/// two-map, grid, four-map.
std::optional<std::vector<TheoremId>> parse_theorem_filter(const std::string& name);

/// Offsets of the certified maps at one signed ratio, against the offsets
/// predicted from words (and reflections / extra generators).
struct InventoryRow {
  Rational ratio;
  std::vector<Rational> expected;
  std::vector<Rational> actual;
  std::size_t unresolved = 0;

  bool matches() const { return unresolved == 0 && expected == actual; }
};

struct NamedCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct TheoremReport {
  TheoremId id = TheoremId::ThreeMapWords;
  std::string instance;
  EngineDepths depths;
  std::vector<InventoryRow> rows;
  std::vector<NamedCheck> checks;
  bool pass = false;

  /// pass = every row matches exactly and every named check holds.
  void finalize();
};

struct VerifyOptions {
  EngineDepths depths;
  /// Test mode: adds one spurious map to the first expected inventory.
  bool inject_wrong_expectation = false;
};

TheoremReport verify_three_map(const Rational& rho, const Rational& lambda, int k_max, const VerifyOptions& options = {});
TheoremReport verify_equal_gap(const std::vector<Rational>& ratios, int k_budget, const VerifyOptions& options = {});

struct TwoMapVariant {
  Rational alpha;
  Rational beta;
};
struct GridVariant {
  Rational beta;
  int m = 2;
};
using CorollaryVariant = std::variant<TwoMapVariant, GridVariant>;

/// TwoMap requires alpha != beta (ParameterOutOfRange otherwise).
TheoremReport verify_corollary(const CorollaryVariant& variant, int k_max, const VerifyOptions& options = {});
TheoremReport verify_example_four_map(const VerifyOptions& options = {});

/// All words w with ratio(phi_w) == ratio, shortest first then lexicographic.
std::vector<Word> words_with_ratio(const Ifs& ifs, const Rational& ratio);

/// The pinned instances run by `selfsim verify-paper`.
std::vector<TheoremReport> run_reference_suite(const std::vector<TheoremId>& only, const VerifyOptions& options = {});

}  // namespace selfsim
