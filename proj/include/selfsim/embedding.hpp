#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "selfsim/cover.hpp"
#include "selfsim/ifs.hpp"

namespace selfsim {

struct EngineDepths {
  int point_depth = 4;
  int cover_depth = 8;
  int branch_depth = 6;
  int max_steps = 64;
  std::uint64_t budget = kDefaultCylinderBudget;
};

/// f = phi_word.
struct IncludedWord {
  Word word;
};
/// f = phi_word o sigma with sigma(x) = 2 * center - x a certified symmetry of K.
struct IncludedReflectedWord {
  Word word;
  Rational center;
};
/// f o phi_branch = phi_word (o sigma when reflected) exactly, for a set of
/// branch words whose cylinders tile the whole symbolic space.
struct ExchangePair {
  Word branch;
  Word word;
  bool reflected = false;
  friend bool operator==(const ExchangePair&, const ExchangePair&) = default;
};
struct IncludedCylinderExchange {
  std::vector<ExchangePair> pairs;
  std::optional<Rational> center;
};
/// point lies in K (certified); f(point) = image lies strictly inside `gap`
/// of the depth-`depth` cover, or outside the hull when gap is empty.
struct ExcludedWitness {
  Rational point;
  Rational image;
  std::optional<Gap> gap;
  int depth = 0;
};
struct UnknownAtDepth {
  int depth = 0;
};

using EmbeddingVerdict =
    std::variant<IncludedWord, IncludedReflectedWord, IncludedCylinderExchange, ExcludedWitness, UnknownAtDepth>;

std::string_view verdict_kind(const EmbeddingVerdict& v);
bool is_included(const EmbeddingVerdict& v);
bool is_excluded(const EmbeddingVerdict& v);

struct CertifiedMap {
  Similitude map;
  EmbeddingVerdict verdict;
};

struct EnumerationResult {
  Rational ratio;
  std::vector<CertifiedMap> certified;  // sorted by offset
  std::vector<Interval> candidates;     // offsets neither certified nor refuted
  std::vector<Similitude> refuted;      // isolated offsets rejected by a witness
  int point_depth = 0;
  int cover_depth = 0;

  std::vector<Rational> certified_offsets() const;
};

struct Decomposition {
  EmbeddingVerdict verdict;
  bool via_fallback = false;  // descent stalled; verdict came from check()
  int steps = 0;
  std::optional<Similitude> residual;  // phi_word^-1 o f at the end of the descent
};

/// Decision procedures for one IFS. Covers, certified points and the
/// symmetry center are computed once at construction; every query is a
/// pure function of them.
class EmbeddingEngine {
 public:
  explicit EmbeddingEngine(Ifs ifs, EngineDepths depths = {});

  const Ifs& ifs() const { return ifs_; }
  const EngineDepths& depths() const { return depths_; }
  const std::optional<Rational>& symmetry_center() const { return center_; }
  const IntervalSet& cover(int depth) const { return covers_.at(static_cast<std::size_t>(depth)); }
  const std::vector<Rational>& points() const { return points_; }

  /// Word w with phi_w = g exactly (or phi_w o sigma = g for negative ratio
  /// when the set is symmetric). Shortest-then-lexicographic first match.
  std::optional<EmbeddingVerdict> match(const Similitude& g) const;

  /// Certified point p of phi_prefix(K) with f(p) outside the cover.
  std::optional<ExcludedWitness> witness(const Similitude& f, const Similitude& prefix = Similitude::identity()) const;

  EmbeddingVerdict check(const Similitude& f) const;
  Decomposition decompose(const Similitude& f) const;
  EnumerationResult enumerate(const Rational& ratio) const;

 private:
  std::optional<Word> match_positive(const Similitude& g) const;

  Ifs ifs_;
  EngineDepths depths_;
  std::vector<IntervalSet> covers_;
  std::vector<Rational> points_;
  std::optional<Rational> center_;
};

/// Index i with target inside pieces[i]. Requires largest_gap(target) to be
/// smaller than every pairwise distance between pieces (HypothesisViolated
/// otherwise) and target to lie in their union (NotCovered otherwise).
std::size_t locate_piece(const IntervalSet& target, const std::vector<IntervalSet>& pieces);

EmbeddingVerdict check_embedding(const Ifs& ifs, const Similitude& f, int point_depth, int cover_depth,
                                 int branch_depth);
Decomposition decompose(const Ifs& ifs, const Similitude& f, int max_steps);
EnumerationResult enumerate_embeddings(const Ifs& ifs, const Rational& ratio, int point_depth, int cover_depth);

/// Conjugation by the hull reflection, mapping a three-map problem with
/// lambda > (1 - rho)/2 onto one with lambda < (1 - rho)/2.
struct MirrorReduction {
  Ifs mirrored;
  Similitude conjugated;  // sigma o f o sigma
  Similitude sigma;

  /// A word answer for the conjugated map, translated back for f.
  Word translate(const Word& w) const { return mirror_word(w); }
  /// sigma o g o sigma.
  Similitude lift(const Similitude& g) const { return compose(sigma, compose(g, sigma)); }
};

/// Throws WrongFamilyRange unless ifs is a three-map with lambda > (1 - rho)/2.
MirrorReduction mirror_reduce(const Ifs& ifs, const Similitude& f);

}  // namespace selfsim
