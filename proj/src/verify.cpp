#include "selfsim/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace selfsim {

namespace {

std::vector<Rational> sorted_unique(std::vector<Rational> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::string join(const std::vector<Rational>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += values[i].str();
  }
  return out;
}

std::string ratio_list(const std::vector<Rational>& ratios) {
  std::string out = "(";
  for (std::size_t i = 0; i < ratios.size(); ++i) {
    if (i) out += ", ";
    out += ratios[i].str();
  }
  return out + ")";
}

/// Expected maps at one signed ratio: the word maps (positive ratio) or the
/// word maps composed with sigma (negative ratio, symmetric sets only),
/// plus any extra generators supplied by the caller.
std::vector<Rational> expected_offsets(const Ifs& ifs, const Rational& ratio, bool reflections,
                                       const std::vector<Similitude>& extra) {
  std::vector<Rational> out;
  const Similitude sigma(Rational(-1), ifs.hull().lo + ifs.hull().hi);
  if (ratio.sign() > 0) {
    for (const auto& w : words_with_ratio(ifs, ratio)) out.push_back(word_map(ifs, w).offset());
  } else if (reflections) {
    for (const auto& w : words_with_ratio(ifs, -ratio)) out.push_back(compose(word_map(ifs, w), sigma).offset());
  }
  for (const auto& g : extra) {
    if (g.ratio() == ratio) out.push_back(g.offset());
  }
  return sorted_unique(std::move(out));
}

InventoryRow make_row(const EmbeddingEngine& engine, const Rational& ratio, std::vector<Rational> expected,
                      std::vector<EnumerationResult>* results = nullptr) {
  EnumerationResult r = engine.enumerate(ratio);
  InventoryRow row;
  row.ratio = ratio;
  row.expected = std::move(expected);
  row.actual = r.certified_offsets();
  row.unresolved = r.candidates.size();
  if (results) results->push_back(std::move(r));
  return row;
}

/// For every certified map, decompose and check must give the same verdict kind.
NamedCheck decompose_agreement(const EmbeddingEngine& engine, const std::vector<EnumerationResult>& results) {
  NamedCheck check{"decompose-agrees-with-check", true, ""};
  std::size_t count = 0;
  for (const auto& r : results) {
    for (const auto& c : r.certified) {
      ++count;
      Decomposition d = engine.decompose(c.map);
      if (verdict_kind(d.verdict) != verdict_kind(c.verdict)) {
        check.pass = false;
        std::ostringstream os;
        os << "map " << c.map << ": decompose " << verdict_kind(d.verdict) << ", check " << verdict_kind(c.verdict);
        check.detail = os.str();
        return check;
      }
    }
  }
  check.detail = std::to_string(count) + " certified maps";
  return check;
}

void inject(TheoremReport& report, const Ifs& ifs) {
  if (report.rows.empty()) return;
  auto& expected = report.rows.front().expected;
  expected.push_back(ifs.hull().hi + Rational(1));
  expected = sorted_unique(std::move(expected));
}

/// Shared harness: enumerate at each ratio with both signs and compare with
/// the word-generated inventory.
TheoremReport verify_words(const Ifs& ifs, TheoremId id, std::string instance, const std::vector<Rational>& ratios,
                           bool reflections, const VerifyOptions& options, const EmbeddingEngine& engine,
                           std::vector<EnumerationResult>& results) {
  TheoremReport report;
  report.id = id;
  report.instance = std::move(instance);
  report.depths = options.depths;
  for (const auto& r : ratios) {
    for (const Rational& signed_ratio : {r, -r}) {
      report.rows.push_back(make_row(engine, signed_ratio, expected_offsets(ifs, signed_ratio, reflections, {}), &results));
    }
  }
  report.checks.push_back(decompose_agreement(engine, results));
  return report;
}

std::vector<Rational> word_ratios(const Ifs& ifs, int k_max) {
  std::vector<Rational> ratios;
  std::vector<Rational> frontier{Rational(1)};
  for (int k = 1; k <= k_max; ++k) {
    std::vector<Rational> next;
    for (const auto& r : frontier) {
      for (const auto& f : ifs.maps()) next.push_back(r * f.ratio());
    }
    frontier = sorted_unique(std::move(next));
    ratios.insert(ratios.end(), frontier.begin(), frontier.end());
  }
  ratios = sorted_unique(std::move(ratios));
  std::reverse(ratios.begin(), ratios.end());
  return ratios;
}

bool is_palindrome(const std::vector<Rational>& v) { return std::equal(v.begin(), v.begin() + v.size() / 2, v.rbegin()); }

}  // namespace

std::string to_string(TheoremId id) {
  switch (id) {
    case TheoremId::ThreeMapWords: return "three-map-words";
    case TheoremId::ThreeMapSymmetric: return "three-map-symmetric";
    case TheoremId::EqualGap: return "equal-gap";
    case TheoremId::TwoMap: return "two-map";
    case TheoremId::Grid: return "grid";
    case TheoremId::FourMapExample: return "four-map";
  }
  return "unknown";
}

std::optional<std::vector<TheoremId>> parse_theorem_filter(const std::string& name) {
  if (name == "three-map") return std::vector{TheoremId::ThreeMapWords, TheoremId::ThreeMapSymmetric};
  if (name == "three-map-words") return std::vector{TheoremId::ThreeMapWords};
  if (name == "three-map-symmetric") return std::vector{TheoremId::ThreeMapSymmetric};
  if (name == "equal-gap") return std::vector{TheoremId::EqualGap};
  if (name == "two-map") return std::vector{TheoremId::TwoMap};
  if (name == "grid") return std::vector{TheoremId::Grid};
  if (name == "four-map") return std::vector{TheoremId::FourMapExample};
  return std::nullopt;
}

void TheoremReport::finalize() {
  pass = std::all_of(rows.begin(), rows.end(), [](const InventoryRow& r) { return r.matches(); }) &&
         std::all_of(checks.begin(), checks.end(), [](const NamedCheck& c) { return c.pass; });
}

std::vector<Word> words_with_ratio(const Ifs& ifs, const Rational& ratio) {
  if (!(ratio.sign() > 0 && ratio <= Rational(1))) {
    throw Error(ErrorKind::ParameterOutOfRange, "word ratios lie in (0, 1], got " + ratio.str());
  }
  std::vector<Word> out;
  std::vector<std::pair<Word, Rational>> frontier{{Word(ifs.size(), {}), Rational(1)}};
  while (!frontier.empty()) {
    std::vector<std::pair<Word, Rational>> next;
    for (auto& [w, r] : frontier) {
      if (r == ratio) {
        out.push_back(w);
        continue;
      }
      for (int i = 1; i <= ifs.size(); ++i) {
        Rational child = r * ifs.map(i).ratio();
        if (ratio <= child) next.emplace_back(w.appended(i), std::move(child));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

TheoremReport verify_three_map(const Rational& rho, const Rational& lambda, int k_max, const VerifyOptions& options) {
  const Ifs ifs = three_map(rho, lambda);
  const Rational threshold = (Rational(1) - rho) / Rational(2);
  const bool symmetric = lambda == threshold;
  const EmbeddingEngine engine(ifs, options.depths);

  std::vector<Rational> ratios;
  for (int k = 1; k <= k_max; ++k) ratios.push_back(rho.pow(static_cast<unsigned>(k)));
  std::vector<EnumerationResult> results;
  TheoremReport report =
      verify_words(ifs, symmetric ? TheoremId::ThreeMapSymmetric : TheoremId::ThreeMapWords,
                   "three-map rho=" + rho.str() + " lambda=" + lambda.str() + " k<=" + std::to_string(k_max), ratios,
                   symmetric, options, engine, results);

  if (threshold < lambda) {
    // Conjugate into the mirrored family and require the same inventories
    // and letter-wise mirrored words.
    const Mirrored mirrored = mirror(ifs);
    const EmbeddingEngine mirror_engine(mirrored.ifs, options.depths);
    NamedCheck inventories{"mirror-inventory-agrees", true, ""};
    NamedCheck words{"mirror-words-translate", true, ""};
    std::size_t translated = 0;
    for (const auto& direct : results) {
      EnumerationResult via = mirror_engine.enumerate(direct.ratio);
      std::vector<Rational> lifted;
      for (const auto& c : via.certified) {
        lifted.push_back(compose(mirrored.sigma, compose(c.map, mirrored.sigma)).offset());
      }
      lifted = sorted_unique(std::move(lifted));
      if (lifted != direct.certified_offsets() || !via.candidates.empty()) {
        inventories.pass = false;
        inventories.detail = "ratio " + direct.ratio.str() + ": direct {" + join(direct.certified_offsets()) +
                             "} vs mirrored {" + join(lifted) + "}";
      }
      for (const auto& c : direct.certified) {
        const MirrorReduction red = mirror_reduce(ifs, c.map);
        const Decomposition conj = mirror_engine.decompose(red.conjugated);
        const Decomposition own = engine.decompose(c.map);
        const auto* cw = std::get_if<IncludedWord>(&conj.verdict);
        const auto* ow = std::get_if<IncludedWord>(&own.verdict);
        if (!cw || !ow || red.translate(cw->word) != ow->word || word_map(ifs, red.translate(cw->word)) != c.map) {
          words.pass = false;
          std::ostringstream os;
          os << "map " << c.map << " does not translate";
          words.detail = os.str();
        } else {
          ++translated;
        }
      }
    }
    if (inventories.pass) inventories.detail = std::to_string(results.size()) + " ratios";
    if (words.pass) words.detail = std::to_string(translated) + " words, j_k = 4 - i_k";
    report.checks.push_back(inventories);
    report.checks.push_back(words);
  }
  if (options.inject_wrong_expectation) inject(report, ifs);
  report.finalize();
  return report;
}

TheoremReport verify_equal_gap(const std::vector<Rational>& ratios, int k_budget, const VerifyOptions& options) {
  const Ifs ifs = equal_gap(ratios);
  const EmbeddingEngine engine(ifs, options.depths);
  std::vector<EnumerationResult> results;
  TheoremReport report = verify_words(ifs, TheoremId::EqualGap,
                                      "equal-gap ratios=" + ratio_list(ratios) + " k<=" + std::to_string(k_budget),
                                      word_ratios(ifs, k_budget), is_palindrome(ratios), options, engine, results);
  if (options.inject_wrong_expectation) inject(report, ifs);
  report.finalize();
  return report;
}

TheoremReport verify_corollary(const CorollaryVariant& variant, int k_max, const VerifyOptions& options) {
  std::vector<EnumerationResult> results;
  if (const auto* two = std::get_if<TwoMapVariant>(&variant)) {
    if (two->alpha == two->beta) {
      throw Error(ErrorKind::ParameterOutOfRange, "two-map harness needs alpha != beta, got " + two->alpha.str());
    }
    const Ifs ifs = two_map(two->alpha, two->beta);
    const EmbeddingEngine engine(ifs, options.depths);
    TheoremReport report = verify_words(
        ifs, TheoremId::TwoMap,
        "two-map alpha=" + two->alpha.str() + " beta=" + two->beta.str() + " k<=" + std::to_string(k_max),
        word_ratios(ifs, k_max), false, options, engine, results);
    if (options.inject_wrong_expectation) inject(report, ifs);
    report.finalize();
    return report;
  }
  const auto& grid = std::get<GridVariant>(variant);
  const Ifs ifs = homogeneous_grid(grid.beta, grid.m);
  const EmbeddingEngine engine(ifs, options.depths);
  TheoremReport report = verify_words(
      ifs, TheoremId::Grid,
      "grid beta=" + grid.beta.str() + " m=" + std::to_string(grid.m) + " k<=" + std::to_string(k_max),
      word_ratios(ifs, k_max), true, options, engine, results);
  if (options.inject_wrong_expectation) inject(report, ifs);
  report.finalize();
  return report;
}

TheoremReport verify_example_four_map(const VerifyOptions& options) {
  const Ifs ifs = four_map_example();
  const EmbeddingEngine engine(ifs, options.depths);
  TheoremReport report;
  report.id = TheoremId::FourMapExample;
  report.instance = "four-map {x/10, (x+1)/10, (x+5)/10, (x+6)/10}";
  report.depths = options.depths;

  // 10 K = K + {0, 1, 5, 6} at cover level
  {
    NamedCheck identity{"scaled-union-identity", true, "10 cover(n) = U (cover(n-1) + c), n = 1..6"};
    const auto levels = cover_levels(ifs, 6, options.depths.budget);
    for (int n = 1; n <= 6; ++n) {
      IntervalSet rhs;
      for (long c : {0L, 1L, 5L, 6L}) rhs = unite(rhs, levels[n - 1].translated(Rational(c)));
      if (levels[n].affine_image(Rational(10), Rational(0)) != rhs) {
        identity.pass = false;
        identity.detail = "fails at n = " + std::to_string(n);
        break;
      }
    }
    report.checks.push_back(identity);
  }

  const Similitude g1(Rational(1, 10), Rational(1, 20));
  const Similitude g2(Rational(1, 10), Rational(11, 20));
  const Similitude sigma(Rational(-1), Rational(2, 3));
  const std::vector<Similitude> extra{g1, g2, compose(g1, sigma), compose(g2, sigma)};

  std::vector<EnumerationResult> results;
  for (const Rational& r : {Rational(1, 10), Rational(-1, 10)}) {
    report.rows.push_back(make_row(engine, r, expected_offsets(ifs, r, true, extra), &results));
  }
  {
    const std::vector<Rational> pinned_pos = sorted_unique(
        {Rational(0), Rational(1, 10), Rational(1, 2), Rational(3, 5), Rational(1, 20), Rational(11, 20)});
    const std::vector<Rational> pinned_neg = sorted_unique(
        {Rational(1, 15), Rational(1, 6), Rational(17, 30), Rational(2, 3), Rational(7, 60), Rational(37, 60)});
    NamedCheck pinned{"pinned-offsets", report.rows[0].expected == pinned_pos && report.rows[1].expected == pinned_neg,
                      "+1/10 {" + join(pinned_pos) + "}, -1/10 {" + join(pinned_neg) + "}"};
    report.checks.push_back(pinned);
  }

  // g1, g2 certificates: f o phi_i = phi_{w_i}, re-checked by composition.
  auto exchange = [&](const std::string& name, const Similitude& g, const std::vector<std::vector<int>>& words) {
    NamedCheck check{name, false, ""};
    const EmbeddingVerdict v = engine.check(g);
    const auto* ex = std::get_if<IncludedCylinderExchange>(&v);
    if (!ex) {
      check.detail = "verdict " + std::string(verdict_kind(v));
      return check;
    }
    std::vector<ExchangePair> expected;
    for (int i = 1; i <= 4; ++i) expected.push_back({Word(4, {i}), Word(4, words[static_cast<std::size_t>(i - 1)]), false});
    bool composes = true;
    std::string listing;
    for (const auto& p : ex->pairs) {
      composes = composes && !p.reflected && compose(g, word_map(ifs, p.branch)) == word_map(ifs, p.word);
      if (!listing.empty()) listing += ", ";
      listing += p.branch.str() + "->" + p.word.str();
    }
    check.pass = composes && ex->pairs == expected;
    check.detail = listing;
    return check;
  };
  report.checks.push_back(exchange("g1-cylinder-exchange", g1, {{1, 3}, {1, 4}, {2, 1}, {2, 2}}));
  report.checks.push_back(exchange("g2-cylinder-exchange", g2, {{3, 3}, {3, 4}, {4, 1}, {4, 2}}));

  {
    const SymmetryVerdict s = is_symmetric(ifs, 2);
    const auto* cert = std::get_if<SymmetricCertified>(&s);
    report.checks.push_back(
        {"symmetric-center", cert != nullptr && cert->center == Rational(1, 3), cert ? cert->center.str() : "not certified"});
  }
  report.checks.push_back(decompose_agreement(engine, results));
  if (options.inject_wrong_expectation) inject(report, ifs);
  report.finalize();
  return report;
}

std::vector<TheoremReport> run_reference_suite(const std::vector<TheoremId>& only, const VerifyOptions& options) {
  auto wanted = [&](TheoremId id) { return only.empty() || std::find(only.begin(), only.end(), id) != only.end(); };
  std::vector<TheoremReport> out;
  if (wanted(TheoremId::ThreeMapWords)) {
    out.push_back(verify_three_map(Rational(1, 5), Rational(3, 10), 3, options));
    out.push_back(verify_three_map(Rational(1, 4), Rational(1, 4), 2, options));
    out.push_back(verify_three_map(Rational(1, 5), Rational(1, 2), 2, options));
  }
  if (wanted(TheoremId::ThreeMapSymmetric)) out.push_back(verify_three_map(Rational(1, 5), Rational(2, 5), 2, options));
  if (wanted(TheoremId::EqualGap)) {
    out.push_back(verify_equal_gap({Rational(1, 4), Rational(1, 3)}, 2, options));
    out.push_back(verify_equal_gap({Rational(1, 4), Rational(1, 4)}, 2, options));
  }
  if (wanted(TheoremId::TwoMap)) out.push_back(verify_corollary(TwoMapVariant{Rational(1, 4), Rational(1, 3)}, 3, options));
  if (wanted(TheoremId::Grid)) out.push_back(verify_corollary(GridVariant{Rational(1, 4), 3}, 2, options));
  if (wanted(TheoremId::FourMapExample)) out.push_back(verify_example_four_map(options));
  return out;
}

}  // namespace selfsim
