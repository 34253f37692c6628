#include "selfsim/dimension.hpp"

#include <map>
#include <optional>
#include <vector>

namespace selfsim {

namespace {

struct Bounds {
  Rational lo;
  Rational hi;
  bool exact() const { return lo == hi; }
};

/// sqrt enclosure with absolute error <= 2^-bits; exact when x is a square
/// of a rational.
Bounds sqrt_bounds(const Rational& x, unsigned bits) {
  const mpz_class& n = x.value().get_num();
  const mpz_class& d = x.value().get_den();
  if (mpz_perfect_square_p(n.get_mpz_t()) && mpz_perfect_square_p(d.get_mpz_t())) {
    mpz_class rn;
    mpz_class rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    Rational r = Rational::from_integers(rn, rd);
    return {r, r};
  }
  // floor(sqrt(x * 4^bits)) / 2^bits <= sqrt(x) < (that + 1) / 2^bits
  mpz_class scaled = (n << (2 * bits)) / d;
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  mpz_class unit = mpz_class(1) << bits;
  return {Rational::from_integers(root, unit), Rational::from_integers(root + 1, unit)};
}

/// Enclosures of ratio^(2^-j), j = 1..levels, by chained square roots.
std::vector<Bounds> root_chain(const Rational& ratio, unsigned levels, unsigned bits) {
  std::vector<Bounds> chain;
  Bounds current{ratio, ratio};
  for (unsigned j = 0; j < levels; ++j) {
    Bounds lo = sqrt_bounds(current.lo, bits);
    Bounds hi = current.exact() ? lo : sqrt_bounds(current.hi, bits);
    current = {lo.lo, hi.hi};
    chain.push_back(current);
  }
  return chain;
}

/// s = integer + numerator / 2^levels, numerator < 2^levels.
struct Dyadic {
  unsigned integer = 0;
  mpz_class numerator;
  unsigned levels = 0;

  Rational value() const {
    return Rational(static_cast<long>(integer)) + Rational::from_integers(numerator, mpz_class(1) << levels);
  }
};

class PowerSum {
 public:
  PowerSum(const Ifs& ifs, unsigned levels) : levels_(levels) {
    for (const auto& f : ifs.maps()) ratios_.push_back(f.ratio());
  }

  /// Sign of sum ratio_i^s - 1, or nullopt when undecided at every tried precision.
  std::optional<int> sign_at(const Dyadic& s) {
    for (unsigned bits = 64; bits <= 4096; bits *= 2) {
      Rational lo(0);
      Rational hi(0);
      for (std::size_t i = 0; i < ratios_.size(); ++i) {
        Bounds term = power(i, s, bits);
        lo += term.lo;
        hi += term.hi;
      }
      if (Rational(1) < lo) return 1;
      if (hi < Rational(1)) return -1;
      if (lo == hi) return 0;
    }
    return std::nullopt;
  }

 private:
  Bounds power(std::size_t i, const Dyadic& s, unsigned bits) {
    auto& cache = chains_[{i, bits}];
    if (cache.empty()) cache = root_chain(ratios_[i], levels_, bits + levels_ + 8);
    Rational whole = ratios_[i].pow(s.integer);
    Bounds out{whole, whole};
    for (unsigned j = 1; j <= s.levels; ++j) {
      if (mpz_tstbit(s.numerator.get_mpz_t(), s.levels - j)) {
        const Bounds& factor = cache[j - 1];
        out = {out.lo * factor.lo, out.hi * factor.hi};
        // keep operands small: round outward to a dyadic grid
        out.lo = round_down(out.lo, bits + 8);
        out.hi = round_up(out.hi, bits + 8);
      }
    }
    return out;
  }

  static Rational round_down(const Rational& x, unsigned bits) {
    if (x.value().get_den() <= (mpz_class(1) << bits)) return x;
    mpz_class scaled = (x.value().get_num() << bits) / x.value().get_den();  // x >= 0
    return Rational::from_integers(scaled, mpz_class(1) << bits);
  }
  static Rational round_up(const Rational& x, unsigned bits) {
    if (x.value().get_den() <= (mpz_class(1) << bits)) return x;
    mpz_class scaled = (x.value().get_num() << bits) / x.value().get_den() + 1;
    return Rational::from_integers(scaled, mpz_class(1) << bits);
  }

  std::vector<Rational> ratios_;
  unsigned levels_;
  std::map<std::pair<std::size_t, unsigned>, std::vector<Bounds>> chains_;
};

unsigned levels_for(const Rational& tol) {
  unsigned levels = 1;
  while (Rational::from_integers(mpz_class(1), mpz_class(1) << levels) > tol / Rational(4)) ++levels;
  return levels;
}

}  // namespace

DimensionEnclosure similarity_dimension(const Ifs& ifs, const Rational& tol) {
  if (tol.sign() <= 0) throw Error(ErrorKind::NonpositiveDelta, "tolerance must be positive");

  // Bracket: at s = 0 the sum is m >= 2; double until it drops below 1.
  unsigned upper = 1;
  {
    PowerSum probe(ifs, 1);
    for (;;) {
      auto sign = probe.sign_at(Dyadic{upper, mpz_class(0), 0});
      if (sign && *sign == 0) {
        Rational s(static_cast<long>(upper));
        return {s, s};
      }
      if (sign && *sign < 0) break;
      upper *= 2;
    }
  }

  const unsigned levels = levels_for(tol) + 2 + static_cast<unsigned>(mpz_sizeinbase(mpz_class(upper).get_mpz_t(), 2));
  PowerSum sum(ifs, levels);
  // positions in units of 2^-levels
  mpz_class lo = 0;
  mpz_class hi = mpz_class(upper) << levels;
  const mpz_class unit_mask = (mpz_class(1) << levels) - 1;
  auto to_dyadic = [&](const mpz_class& k) {
    mpz_class whole = k >> levels;
    return Dyadic{static_cast<unsigned>(whole.get_ui()), k & unit_mask, levels};
  };
  auto to_rational = [&](const mpz_class& k) { return to_dyadic(k).value(); };

  while (to_rational(hi) - to_rational(lo) > tol) {
    mpz_class mid = (lo + hi) >> 1;
    if (mid == lo || mid == hi) break;
    auto sign = sum.sign_at(to_dyadic(mid));
    if (sign) {
      if (*sign == 0) {
        Rational s = to_rational(mid);
        return {s, s};
      }
      (*sign > 0 ? lo : hi) = mid;
      continue;
    }
    // Undecided at mid: the root is within reach of mid. The sum is strictly
    // decreasing in s, so decided signs one step either side bracket it.
    mpz_class left = mid - 1;
    mpz_class right = mid + 1;
    auto sl = sum.sign_at(to_dyadic(left));
    auto sr = sum.sign_at(to_dyadic(right));
    if (sl && sr && *sl > 0 && *sr < 0) return {to_rational(left), to_rational(right)};
    throw Error(ErrorKind::HypothesisViolated, "could not separate the dimension root near " + to_rational(mid).str());
  }
  return {to_rational(lo), to_rational(hi)};
}

}  // namespace selfsim
