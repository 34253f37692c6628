#include "selfsim/embedding.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace selfsim {

namespace {

constexpr std::size_t kMaxWordLength = 256;
constexpr std::size_t kMaxFrontier = std::size_t{1} << 16;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

std::string_view verdict_kind(const EmbeddingVerdict& v) {
  return std::visit(Overloaded{
                        [](const IncludedWord&) { return std::string_view("included-word"); },
                        [](const IncludedReflectedWord&) { return std::string_view("included-reflected-word"); },
                        [](const IncludedCylinderExchange&) { return std::string_view("included-cylinder-exchange"); },
                        [](const ExcludedWitness&) { return std::string_view("excluded-witness"); },
                        [](const UnknownAtDepth&) { return std::string_view("unknown-at-depth"); },
                    },
                    v);
}

bool is_included(const EmbeddingVerdict& v) {
  return std::holds_alternative<IncludedWord>(v) || std::holds_alternative<IncludedReflectedWord>(v) ||
         std::holds_alternative<IncludedCylinderExchange>(v);
}

bool is_excluded(const EmbeddingVerdict& v) { return std::holds_alternative<ExcludedWitness>(v); }

std::vector<Rational> EnumerationResult::certified_offsets() const {
  std::vector<Rational> out;
  out.reserve(certified.size());
  for (const auto& c : certified) out.push_back(c.map.offset());
  return out;
}

EmbeddingEngine::EmbeddingEngine(Ifs ifs, EngineDepths depths) : ifs_(std::move(ifs)), depths_(depths) {
  if (depths_.point_depth < 0 || depths_.cover_depth < 1 || depths_.branch_depth < 0 || depths_.max_steps < 1) {
    throw Error(ErrorKind::ParameterOutOfRange, "engine depths must be non-negative (cover depth and steps >= 1)");
  }
  covers_ = cover_levels(ifs_, depths_.cover_depth, depths_.budget);
  points_ = exact_points(ifs_, depths_.point_depth, depths_.budget);
  center_ = selfsim::symmetry_center(ifs_);
}

std::optional<Word> EmbeddingEngine::match_positive(const Similitude& g) const {
  if (g.ratio().sign() <= 0) return std::nullopt;
  const Interval& hull = ifs_.hull();
  const Rational one(1);
  struct Node {
    Word word;
    Similitude residual;  // phi_word^-1 o g
  };
  std::vector<Node> frontier{{Word(ifs_.size(), {}), g}};
  while (!frontier.empty()) {
    std::vector<Node> next;
    for (auto& node : frontier) {
      if (node.residual.is_identity()) return node.word;
      if (!(node.residual.ratio() < one) || node.word.length() >= kMaxWordLength) continue;
      for (int i = 1; i <= ifs_.size(); ++i) {
        Similitude child = compose(invert(ifs_.map(i)), node.residual);
        if (one < child.ratio()) continue;
        if (!hull.contains(child(hull))) continue;
        next.push_back({node.word.appended(i), std::move(child)});
      }
    }
    if (next.size() > kMaxFrontier) return std::nullopt;
    frontier = std::move(next);
  }
  return std::nullopt;
}

std::optional<EmbeddingVerdict> EmbeddingEngine::match(const Similitude& g) const {
  if (g.ratio().sign() > 0) {
    if (auto w = match_positive(g)) return IncludedWord{*w};
    return std::nullopt;
  }
  if (!center_) return std::nullopt;
  // g = h o sigma with h = g o sigma of positive ratio
  if (auto w = match_positive(compose(g, Similitude::reflection(*center_)))) {
    return IncludedReflectedWord{*w, *center_};
  }
  return std::nullopt;
}

std::optional<ExcludedWitness> EmbeddingEngine::witness(const Similitude& f, const Similitude& prefix) const {
  const IntervalSet& deepest = covers_.back();
  for (const auto& p : points_) {
    Rational q = prefix(p);
    Rational y = f(q);
    if (contains_point(deepest, y)) continue;
    for (int d = 0; d <= depths_.cover_depth; ++d) {
      const IntervalSet& c = cover(d);
      if (!contains_point(c, y)) return ExcludedWitness{q, y, c.gap_containing(y), d};
    }
  }
  return std::nullopt;
}

EmbeddingVerdict EmbeddingEngine::check(const Similitude& f) const {
  if (!f.is_contractive()) throw Error(ErrorKind::NotContractive, "map " + f.ratio().str() + " is not contractive");
  const int m = ifs_.size();
  std::deque<Word> queue{Word(m, {})};
  std::vector<ExchangePair> pairs;
  bool open_leaf = false;
  while (!queue.empty()) {
    Word u = std::move(queue.front());
    queue.pop_front();
    const Similitude prefix = word_map(ifs_, u);
    const Similitude g = compose(f, prefix);
    if (auto matched = match(g)) {
      if (u.empty()) return *matched;
      if (auto* w = std::get_if<IncludedWord>(&*matched)) {
        pairs.push_back({u, w->word, false});
      } else {
        pairs.push_back({u, std::get<IncludedReflectedWord>(*matched).word, true});
      }
      continue;
    }
    if (auto w = witness(f, prefix)) return *w;
    if (static_cast<int>(u.length()) < depths_.branch_depth) {
      for (int i = 1; i <= m; ++i) queue.push_back(u.appended(i));
    } else {
      open_leaf = true;
    }
  }
  if (open_leaf) return UnknownAtDepth{depths_.branch_depth};
  std::sort(pairs.begin(), pairs.end(), [](const ExchangePair& a, const ExchangePair& b) { return a.branch < b.branch; });
  const bool any_reflected = std::any_of(pairs.begin(), pairs.end(), [](const ExchangePair& p) { return p.reflected; });
  return IncludedCylinderExchange{std::move(pairs), any_reflected ? center_ : std::nullopt};
}

Decomposition EmbeddingEngine::decompose(const Similitude& f) const {
  if (!f.is_contractive()) throw Error(ErrorKind::NotContractive, "map " + f.ratio().str() + " is not contractive");
  const int m = ifs_.size();
  const Rational one(1);
  const Interval& hull = ifs_.hull();
  auto fallback = [&](int steps) { return Decomposition{check(f), true, steps, std::nullopt}; };

  Similitude g = f;
  Word word(m, {});
  for (int steps = 0;; ++steps) {
    if (g.ratio().abs() == one) {
      if (g.is_identity()) return {IncludedWord{word}, false, steps, g};
      if (center_ && g == Similitude::reflection(*center_)) {
        return {IncludedReflectedWord{word, *center_}, false, steps, g};
      }
      return fallback(steps);
    }
    if (steps >= depths_.max_steps) {
      throw Error(ErrorKind::StepBudgetExceeded, "descent did not finish within " + std::to_string(depths_.max_steps) +
                                                     " steps");
    }
    const Interval image = g(hull);
    std::vector<int> children;
    for (int i = 1; i <= m; ++i) {
      if (ifs_.map(i)(hull).contains(image)) children.push_back(i);
    }
    if (children.empty()) return fallback(steps);
    int chosen = children.front();
    if (children.size() > 1) {
      // Overlapping hull images: separate with refined covers.
      const int n = depths_.cover_depth;
      std::vector<IntervalSet> pieces;
      for (int i : children) pieces.push_back(ifs_.map(i)(cover(n - 1)));
      try {
        chosen = children[locate_piece(g(cover(n)), pieces)];
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::HypothesisViolated && e.kind() != ErrorKind::NotCovered) throw;
        return fallback(steps);
      }
    }
    g = compose(invert(ifs_.map(chosen)), g);
    word.letters.push_back(chosen);
  }
}

EnumerationResult EmbeddingEngine::enumerate(const Rational& ratio) const {
  if (!(ratio.sign() != 0 && ratio.abs() < Rational(1))) {
    throw Error(ErrorKind::ParameterOutOfRange, "need 0 < |ratio| < 1, got " + ratio.str());
  }
  const Interval& hull = ifs_.hull();
  // f_t(hull) inside hull
  IntervalSet feasible = ratio.sign() > 0 ? IntervalSet{Interval(hull.lo - ratio * hull.lo, hull.hi - ratio * hull.hi)}
                                          : IntervalSet{Interval(hull.lo - ratio * hull.hi, hull.hi - ratio * hull.lo)};
  // f(p) in cover(n) for every certified point p  <=>  t in cover(n) - ratio * p.
  // The covers are nested, so sweeping coarse to fine leaves the final set
  // unchanged while keeping every intersection small.
  for (const auto& covered : covers_) {
    for (const auto& p : points_) {
      if (feasible.empty()) break;
      const Rational shift = ratio * p;
      std::vector<Interval> kept;
      for (const auto& part : feasible.parts()) {
        for (const auto& c : covered.window(part.lo + shift, part.hi + shift)) {
          kept.emplace_back(max(part.lo, c.lo - shift), min(part.hi, c.hi - shift));
        }
      }
      feasible = IntervalSet::from_parts(std::move(kept));
    }
  }

  EnumerationResult result;
  result.ratio = ratio;
  result.point_depth = depths_.point_depth;
  result.cover_depth = depths_.cover_depth;
  for (const auto& component : feasible.parts()) {
    if (!component.is_point()) {
      result.candidates.push_back(component);
      continue;
    }
    Similitude f(ratio, component.lo);
    EmbeddingVerdict verdict = check(f);
    if (is_included(verdict)) {
      result.certified.push_back({std::move(f), std::move(verdict)});
    } else if (is_excluded(verdict)) {
      result.refuted.push_back(std::move(f));
    } else {
      result.candidates.push_back(component);
    }
  }
  return result;
}

std::size_t locate_piece(const IntervalSet& target, const std::vector<IntervalSet>& pieces) {
  if (pieces.empty()) throw Error(ErrorKind::NotCovered, "no pieces to locate the target in");
  std::optional<Rational> separation;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    for (std::size_t j = i + 1; j < pieces.size(); ++j) {
      Rational d = dist(pieces[i], pieces[j]);
      if (!separation || d < *separation) separation = d;
    }
  }
  const Rational gap = largest_gap(target);
  if (separation && !(gap < *separation)) {
    throw Error(ErrorKind::HypothesisViolated,
                "largest gap of target " + gap.str() + " is not below the piece separation " + separation->str());
  }
  IntervalSet all;
  for (const auto& piece : pieces) all = unite(all, piece);
  if (!includes(all, target)) throw Error(ErrorKind::NotCovered, "target " + target.hull().lo.str() + ".." +
                                                                    target.hull().hi.str() + " escapes the pieces");
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (includes(pieces[i], target)) return i;
  }
  throw Error(ErrorKind::NotCovered, "target meets several pieces");  // unreachable under the hypothesis
}

EmbeddingVerdict check_embedding(const Ifs& ifs, const Similitude& f, int point_depth, int cover_depth,
                                 int branch_depth) {
  EngineDepths depths;
  depths.point_depth = point_depth;
  depths.cover_depth = cover_depth;
  depths.branch_depth = branch_depth;
  return EmbeddingEngine(ifs, depths).check(f);
}

Decomposition decompose(const Ifs& ifs, const Similitude& f, int max_steps) {
  EngineDepths depths;
  depths.max_steps = max_steps;
  return EmbeddingEngine(ifs, depths).decompose(f);
}

EnumerationResult enumerate_embeddings(const Ifs& ifs, const Rational& ratio, int point_depth, int cover_depth) {
  EngineDepths depths;
  depths.point_depth = point_depth;
  depths.cover_depth = cover_depth;
  return EmbeddingEngine(ifs, depths).enumerate(ratio);
}

MirrorReduction mirror_reduce(const Ifs& ifs, const Similitude& f) {
  const auto* params = std::get_if<ThreeMapFamily>(&ifs.family());
  if (params == nullptr) throw Error(ErrorKind::WrongFamilyRange, "mirror reduction applies to three-map IFSs only");
  const Rational threshold = (Rational(1) - params->rho) / Rational(2);
  if (!(threshold < params->lambda)) {
    throw Error(ErrorKind::WrongFamilyRange,
                "need lambda > (1 - rho)/2 = " + threshold.str() + ", got lambda = " + params->lambda.str());
  }
  Mirrored m = mirror(ifs);
  Similitude conjugated = compose(m.sigma, compose(f, m.sigma));
  return {std::move(m.ifs), std::move(conjugated), m.sigma};
}

}  // namespace selfsim
