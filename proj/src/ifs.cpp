#include "selfsim/ifs.hpp"

#include <algorithm>

#include "selfsim/cover.hpp"

namespace selfsim {

namespace {

[[noreturn]] void out_of_range(const std::string& what) { throw Error(ErrorKind::ParameterOutOfRange, what); }

bool by_offset(const Similitude& a, const Similitude& b) {
  if (a.offset() != b.offset()) return a.offset() < b.offset();
  return a.ratio() < b.ratio();
}

}  // namespace

std::string family_name(const Family& family) {
  struct Visitor {
    std::string operator()(const GenericFamily&) const { return "generic"; }
    std::string operator()(const ThreeMapFamily&) const { return "three-map"; }
    std::string operator()(const EqualGapFamily&) const { return "equal-gap"; }
    std::string operator()(const TwoMapFamily&) const { return "two-map"; }
    std::string operator()(const GridFamily&) const { return "grid"; }
    std::string operator()(const FourMapExampleFamily&) const { return "four-map"; }
  };
  return std::visit(Visitor{}, family);
}

Ifs::Ifs(std::vector<Similitude> maps, Family family) : maps_(std::move(maps)), family_(std::move(family)) {
  if (maps_.size() < 2) out_of_range("an IFS needs at least two maps");
  for (const auto& f : maps_) {
    if (f.ratio().sign() <= 0 || !(f.ratio() < Rational(1))) {
      out_of_range("IFS map ratio " + f.ratio().str() + " outside (0, 1)");
    }
  }
  Rational lo = maps_.front().fixed_point();
  Rational hi = lo;
  for (const auto& f : maps_) {
    Rational p = f.fixed_point();
    lo = min(lo, p);
    hi = max(hi, p);
  }
  if (lo == hi) out_of_range("all maps share one fixed point; the attractor is a singleton");
  hull_ = Interval(std::move(lo), std::move(hi));
}

bool Ifs::is_homogeneous() const {
  return std::all_of(maps_.begin(), maps_.end(), [&](const Similitude& f) { return f.ratio() == maps_.front().ratio(); });
}

Ifs three_map(const Rational& rho, const Rational& lambda) {
  if (!(rho.sign() > 0 && rho < Rational(1, 3))) out_of_range("need 0 < rho < 1/3, got rho = " + rho.str());
  if (lambda < rho) out_of_range("need rho <= lambda, got lambda = " + lambda.str() + " < rho = " + rho.str());
  const Rational upper = Rational(1) - rho - rho;
  if (upper < lambda) {
    out_of_range("need lambda <= 1 - 2 rho = " + upper.str() + ", got lambda = " + lambda.str());
  }
  return Ifs({{rho, Rational(0)}, {rho, lambda}, {rho, Rational(1) - rho}}, ThreeMapFamily{rho, lambda});
}

Rational equal_gap_gamma(const std::vector<Rational>& ratios) {
  if (ratios.size() < 2) out_of_range("equal-gap family needs m >= 2 ratios");
  Rational sum(0);
  for (const auto& r : ratios) {
    if (r.sign() <= 0 || !(r < Rational(1))) out_of_range("ratio " + r.str() + " outside (0, 1)");
    sum += r;
  }
  if (!(sum < Rational(1))) out_of_range("need sum of ratios < 1, got " + sum.str());
  return (Rational(1) - sum) / Rational(static_cast<long>(ratios.size()) - 1);
}

Ifs equal_gap(const std::vector<Rational>& ratios) {
  const Rational gamma = equal_gap_gamma(ratios);
  std::vector<Similitude> maps;
  Rational offset(0);
  for (const auto& r : ratios) {
    maps.emplace_back(r, offset);
    offset += r + gamma;
  }
  return Ifs(std::move(maps), EqualGapFamily{ratios});
}

Ifs two_map(const Rational& alpha, const Rational& beta) {
  if (alpha.sign() <= 0 || beta.sign() <= 0) out_of_range("need alpha, beta > 0");
  if (!(alpha + beta < Rational(1))) out_of_range("need alpha + beta < 1, got " + (alpha + beta).str());
  return Ifs({{alpha, Rational(0)}, {beta, Rational(1) - beta}}, TwoMapFamily{alpha, beta});
}

Ifs homogeneous_grid(const Rational& beta, int m) {
  if (m < 2) out_of_range("need m >= 2");
  if (!(beta.sign() > 0 && beta < Rational(1, m))) {
    out_of_range("need 0 < beta < 1/m = 1/" + std::to_string(m) + ", got beta = " + beta.str());
  }
  std::vector<Similitude> maps;
  const Rational step = (Rational(1) - beta) / Rational(m - 1);
  for (int i = 1; i <= m; ++i) maps.emplace_back(beta, Rational(i - 1) * step);
  return Ifs(std::move(maps), GridFamily{beta, m});
}

Ifs four_map_example() {
  const Rational tenth(1, 10);
  std::vector<Similitude> maps;
  for (long digit : {0L, 1L, 5L, 6L}) maps.emplace_back(tenth, Rational(digit, 10));
  return Ifs(std::move(maps), FourMapExampleFamily{});
}

Similitude word_map(const Ifs& ifs, const Word& w) {
  if (w.alphabet_size != ifs.size()) {
    throw Error(ErrorKind::AlphabetMismatch, "word over " + std::to_string(w.alphabet_size) + " letters, IFS has " +
                                                 std::to_string(ifs.size()) + " maps");
  }
  Similitude out;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out = compose(ifs.map(*it), out);
  return out;
}

Mirrored mirror(const Ifs& ifs) {
  const Rational c = ifs.hull().lo + ifs.hull().hi;
  const Similitude sigma(Rational(-1), c);
  std::vector<Similitude> maps;
  for (auto it = ifs.maps().rbegin(); it != ifs.maps().rend(); ++it) {
    maps.push_back(compose(sigma, compose(*it, sigma)));
  }
  struct Visitor {
    Family operator()(const GenericFamily& f) const { return f; }
    Family operator()(const ThreeMapFamily& f) const { return ThreeMapFamily{f.rho, Rational(1) - f.rho - f.lambda}; }
    Family operator()(const EqualGapFamily& f) const {
      return EqualGapFamily{std::vector<Rational>(f.ratios.rbegin(), f.ratios.rend())};
    }
    Family operator()(const TwoMapFamily& f) const { return TwoMapFamily{f.beta, f.alpha}; }
    Family operator()(const GridFamily& f) const { return f; }
    Family operator()(const FourMapExampleFamily& f) const { return f; }
  };
  return {Ifs(std::move(maps), std::visit(Visitor{}, ifs.family())), sigma};
}

std::optional<Rational> symmetry_center(const Ifs& ifs) {
  auto reflected = mirror(ifs).ifs.maps();
  auto original = ifs.maps();
  std::sort(reflected.begin(), reflected.end(), by_offset);
  std::sort(original.begin(), original.end(), by_offset);
  if (reflected != original) return std::nullopt;
  return (ifs.hull().lo + ifs.hull().hi) / Rational(2);
}

SymmetryVerdict is_symmetric(const Ifs& ifs, int depth) {
  if (depth < 1) throw Error(ErrorKind::ParameterOutOfRange, "symmetry depth must be >= 1");
  if (auto center = symmetry_center(ifs)) return SymmetricCertified{*center};
  const Rational c = ifs.hull().lo + ifs.hull().hi;
  for (int d = 1; d <= depth; ++d) {
    const IntervalSet covered = cover(ifs, d).cover;
    for (const auto& p : exact_points(ifs, d)) {
      Rational q = c - p;
      if (!contains_point(covered, q)) return AsymmetricWitness{p, q, covered.gap_containing(q), d};
    }
  }
  return SymmetryUnknown{depth};
}

std::ostream& operator<<(std::ostream& os, const Ifs& ifs) {
  os << family_name(ifs.family()) << " {";
  for (std::size_t i = 0; i < ifs.maps().size(); ++i) {
    if (i) os << ", ";
    os << ifs.maps()[i];
  }
  return os << "} hull " << ifs.hull();
}

}  // namespace selfsim
