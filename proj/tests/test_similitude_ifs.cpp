#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <functional>

#include "selfsim/cover.hpp"
#include "selfsim/dimension.hpp"
#include "selfsim/error.hpp"
#include "selfsim/ifs.hpp"
#include "support.hpp"

using namespace selfsim;
using selfsim::testing::q;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::ParseError;
}

void for_each_word(int m, int max_len, const std::function<void(const Word&)>& visit) {
  std::vector<Word> level{Word(m, {})};
  visit(level.front());
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const auto& w : level) {
      for (int i = 1; i <= m; ++i) {
        next.push_back(w.appended(i));
        visit(next.back());
      }
    }
    level = std::move(next);
  }
}

std::vector<Similitude> sorted_maps(const Ifs& ifs) {
  auto maps = ifs.maps();
  std::sort(maps.begin(), maps.end(), [](const Similitude& a, const Similitude& b) {
    return a.offset() != b.offset() ? a.offset() < b.offset() : a.ratio() < b.ratio();
  });
  return maps;
}

}  // namespace

TEST_SUITE("similitude") {
  TEST_CASE("apply") {
    CHECK(Similitude(q(1, 5), q(0))(q(1)) == q(1, 5));
    CHECK(Similitude(q(-1), q(1))(q(1, 3)) == q(2, 3));
    CHECK(apply(Similitude(q(1, 10), q(1, 20)), q(2, 3)) == q(7, 60));
    CHECK(Similitude(q(-1, 2), q(1))(Interval(q(0), q(1))) == Interval(q(1, 2), q(1)));
    CHECK(kind_of([] { (void)Similitude(q(0), q(1)); }) == ErrorKind::ParameterOutOfRange);
  }

  TEST_CASE("compose and invert") {
    const Ifs e = three_map(q(1, 5), q(3, 10));
    CHECK(compose(e.map(2), e.map(3)) == Similitude(q(1, 25), q(23, 50)));
    const Similitude f(q(2, 7), q(-1, 3));
    CHECK(compose(f, Similitude::identity()) == f);
    CHECK(compose(Similitude::identity(), f) == f);
    const Similitude sigma(q(-1), q(3, 4));
    CHECK(compose(sigma, sigma).is_identity());
    CHECK(Similitude::reflection(q(1, 3)) == Similitude(q(-1), q(2, 3)));
    CHECK(invert(Similitude(q(1, 5), q(0))) == Similitude(q(5), q(0)));
    CHECK(invert(Similitude(q(1, 5), q(3, 10))) == Similitude(q(5), q(-3, 2)));
    CHECK(invert(Similitude(q(-1), q(1))) == Similitude(q(-1), q(1)));
    CHECK(Similitude(q(1, 10), q(1, 20)).fixed_point() == q(1, 18));
    CHECK(kind_of([] { (void)Similitude(q(1), q(1)).fixed_point(); }) == ErrorKind::ParameterOutOfRange);
  }

  TEST_CASE("inverse and associativity over a rational grid") {
    const std::vector<Rational> ratios{q(-3, 2), q(-1), q(-1, 3), q(1, 4), q(2, 5), q(1), q(5, 2)};
    const std::vector<Rational> offsets{q(-1), q(0), q(1, 6), q(3, 8)};
    std::vector<Similitude> maps;
    for (const auto& r : ratios) {
      for (const auto& t : offsets) maps.emplace_back(r, t);
    }
    std::size_t failures = 0;
    for (const auto& f : maps) {
      if (!compose(invert(f), f).is_identity() || !compose(f, invert(f)).is_identity()) ++failures;
      for (const auto& g : maps) {
        for (std::size_t k = 0; k < maps.size(); k += 5) {
          const auto& h = maps[k];
          if (compose(compose(f, g), h) != compose(f, compose(g, h))) ++failures;
        }
      }
    }
    CHECK(failures == 0);
  }

  TEST_CASE("words") {
    CHECK(Word(3, {2, 3}).str() == "2 3");
    CHECK(Word(3, {}).str() == "()");
    CHECK(kind_of([] { (void)Word(3, {4}); }) == ErrorKind::ParameterOutOfRange);
    CHECK(kind_of([] { (void)Word(3, {0}); }) == ErrorKind::ParameterOutOfRange);
    CHECK(mirror_word(Word(3, {1, 3})) == Word(3, {3, 1}));
    CHECK(mirror_word(Word(3, {})) == Word(3, {}));
    CHECK(mirror_word(Word(4, {2, 2})) == Word(4, {3, 3}));
    CHECK(Word(3, {3}) < Word(3, {1, 1}));
    CHECK(Word(3, {1, 2}) < Word(3, {2, 1}));
  }
}

TEST_SUITE("ifs constructors") {
  TEST_CASE("three-map") {
    const Ifs e = three_map(q(1, 5), q(3, 10));
    CHECK(e.hull() == Interval(q(0), q(1)));
    CHECK(e.maps() == std::vector<Similitude>{{q(1, 5), q(0)}, {q(1, 5), q(3, 10)}, {q(1, 5), q(4, 5)}});
    CHECK(e.is_homogeneous());
    CHECK(family_name(e.family()) == "three-map");
    CHECK(kind_of([] { (void)three_map(q(1, 3), q(1, 3)); }) == ErrorKind::ParameterOutOfRange);
    CHECK(kind_of([] { (void)three_map(q(1, 5), q(7, 10)); }) == ErrorKind::ParameterOutOfRange);
    CHECK(kind_of([] { (void)three_map(q(1, 5), q(1, 10)); }) == ErrorKind::ParameterOutOfRange);
    CHECK(kind_of([] { (void)three_map(q(0), q(1, 2)); }) == ErrorKind::ParameterOutOfRange);
    // Both ends of the lambda range are allowed.
    CHECK(three_map(q(1, 5), q(1, 5)).size() == 3);
    CHECK(three_map(q(1, 5), q(3, 5)).size() == 3);
  }

  TEST_CASE("equal-gap") {
    const Ifs e = equal_gap({q(1, 4), q(1, 3)});
    CHECK(equal_gap_gamma({q(1, 4), q(1, 3)}) == q(5, 12));
    CHECK(e.maps() == std::vector<Similitude>{{q(1, 4), q(0)}, {q(1, 3), q(2, 3)}});
    CHECK(equal_gap({q(1, 5), q(1, 5), q(1, 5)}).maps() == three_map(q(1, 5), q(2, 5)).maps());
    CHECK(kind_of([] { (void)equal_gap({q(1, 2), q(3, 4)}); }) == ErrorKind::ParameterOutOfRange);
    CHECK(kind_of([] { (void)equal_gap({q(1, 2)}); }) == ErrorKind::ParameterOutOfRange);

    for (const auto& ratios : std::vector<std::vector<Rational>>{
             {q(1, 4), q(1, 3)}, {q(1, 10), q(1, 5), q(1, 7)}, {q(1, 6), q(1, 6), q(1, 9), q(1, 3)}}) {
      const Ifs f = equal_gap(ratios);
      const Rational gamma = equal_gap_gamma(ratios);
      CHECK(f.hull() == Interval(q(0), q(1)));
      const auto g = gaps(cover(f, 1).cover);
      REQUIRE(g.size() == ratios.size() - 1);
      for (const auto& gap : g) CHECK(gap.length() == gamma);
    }
  }

  TEST_CASE("two-map and grid") {
    CHECK(two_map(q(1, 4), q(1, 3)).maps() == std::vector<Similitude>{{q(1, 4), q(0)}, {q(1, 3), q(2, 3)}});
    CHECK(kind_of([] { (void)two_map(q(1, 2), q(1, 2)); }) == ErrorKind::ParameterOutOfRange);
    CHECK(two_map(q(1, 3), q(1, 3)).size() == 2);
    const Ifs grid = homogeneous_grid(q(1, 4), 3);
    CHECK(grid.maps() == std::vector<Similitude>{{q(1, 4), q(0)}, {q(1, 4), q(3, 8)}, {q(1, 4), q(3, 4)}});
    CHECK(kind_of([] { (void)homogeneous_grid(q(1, 2), 2); }) == ErrorKind::ParameterOutOfRange);
    CHECK(kind_of([] { (void)homogeneous_grid(q(1, 4), 1); }) == ErrorKind::ParameterOutOfRange);
    CHECK(homogeneous_grid(q(1, 4), 2).maps() == two_map(q(1, 4), q(1, 4)).maps());
    CHECK_FALSE(homogeneous_grid(q(1, 4), 2) == two_map(q(1, 4), q(1, 4)));
  }

  TEST_CASE("four-map") {
    const Ifs k = four_map_example();
    CHECK(k.hull() == Interval(q(0), q(2, 3)));
    CHECK(symmetry_center(k) == q(1, 3));
    CHECK(word_map(k, Word(4, {1, 3})) == Similitude(q(1, 100), q(1, 20)));
  }

  TEST_CASE("generic validation") {
    CHECK(kind_of([] { (void)Ifs({Similitude(q(1, 2), q(0))}); }) == ErrorKind::ParameterOutOfRange);
    CHECK(kind_of([] { (void)Ifs({Similitude(q(1, 2), q(0)), Similitude(q(-1, 2), q(1))}); }) ==
          ErrorKind::ParameterOutOfRange);
    CHECK(kind_of([] { (void)Ifs({Similitude(q(1, 2), q(0)), Similitude(q(1), q(1))}); }) ==
          ErrorKind::ParameterOutOfRange);
    // Common fixed point 0: the attractor is a single point.
    CHECK(kind_of([] { (void)Ifs({Similitude(q(1, 2), q(0)), Similitude(q(1, 3), q(0))}); }) ==
          ErrorKind::ParameterOutOfRange);
    const Ifs g({Similitude(q(1, 3), q(1)), Similitude(q(1, 2), q(-1))});
    CHECK(g.hull() == Interval(q(-2), q(3, 2)));
    CHECK(family_name(g.family()) == "generic");
  }
}

TEST_SUITE("words and mirrors") {
  TEST_CASE("word map examples") {
    const Ifs e = three_map(q(1, 5), q(3, 10));
    CHECK(word_map(e, Word(3, {2, 3})) == Similitude(q(1, 25), q(23, 50)));
    CHECK(word_map(e, Word(3, {})).is_identity());
    CHECK(kind_of([&] { (void)word_map(e, Word(4, {1})); }) == ErrorKind::AlphabetMismatch);
  }

  TEST_CASE("word maps respect concatenation") {
    for (const Ifs& ifs : {three_map(q(1, 5), q(3, 10)), four_map_example(), two_map(q(1, 4), q(1, 3))}) {
      std::size_t failures = 0;
      for_each_word(ifs.size(), 6 - ifs.size() / 2, [&](const Word& w) {
        for (std::size_t cut = 0; cut <= w.length(); ++cut) {
          const Word head(w.alphabet_size, {w.letters.begin(), w.letters.begin() + static_cast<long>(cut)});
          const Word tail(w.alphabet_size, {w.letters.begin() + static_cast<long>(cut), w.letters.end()});
          if (word_map(ifs, w) != compose(word_map(ifs, head), word_map(ifs, tail))) ++failures;
        }
      });
      CHECK(failures == 0);
    }
  }

  TEST_CASE("mirror examples") {
    const auto m = mirror(three_map(q(1, 5), q(1, 2)));
    CHECK(m.ifs == three_map(q(1, 5), q(3, 10)));
    CHECK(m.sigma == Similitude(q(-1), q(1)));
    CHECK(mirror(equal_gap({q(1, 4), q(1, 3)})).ifs == equal_gap({q(1, 3), q(1, 4)}));
    CHECK(mirror(two_map(q(1, 4), q(1, 3))).ifs == two_map(q(1, 3), q(1, 4)));
    const Ifs g({Similitude(q(1, 3), q(1)), Similitude(q(1, 2), q(-1)), Similitude(q(1, 4), q(0))});
    CHECK(sorted_maps(mirror(mirror(g).ifs).ifs) == sorted_maps(g));
  }

  TEST_CASE("mirror conjugates word maps") {
    for (const Ifs& ifs : {three_map(q(1, 5), q(1, 2)), four_map_example(), equal_gap({q(1, 4), q(1, 3)}),
                           Ifs({Similitude(q(1, 3), q(1)), Similitude(q(1, 2), q(-1))})}) {
      const auto m = mirror(ifs);
      CHECK(mirror(m.ifs).ifs == ifs);
      std::size_t failures = 0;
      for_each_word(ifs.size(), 4, [&](const Word& w) {
        if (word_map(m.ifs, mirror_word(w)) != compose(m.sigma, compose(word_map(ifs, w), m.sigma))) ++failures;
      });
      CHECK(failures == 0);
    }
  }
}

TEST_SUITE("symmetry") {
  TEST_CASE("examples") {
    const auto sym = is_symmetric(three_map(q(1, 5), q(2, 5)), 2);
    REQUIRE(std::holds_alternative<SymmetricCertified>(sym));
    CHECK(std::get<SymmetricCertified>(sym).center == q(1, 2));
    const auto four = is_symmetric(four_map_example(), 2);
    REQUIRE(std::holds_alternative<SymmetricCertified>(four));
    CHECK(std::get<SymmetricCertified>(four).center == q(1, 3));
    CHECK(std::holds_alternative<SymmetricCertified>(is_symmetric(homogeneous_grid(q(1, 4), 3), 1)));
    CHECK(std::holds_alternative<AsymmetricWitness>(is_symmetric(two_map(q(1, 4), q(1, 3)), 2)));
    CHECK(kind_of([] { (void)is_symmetric(four_map_example(), 0); }) == ErrorKind::ParameterOutOfRange);
  }

  TEST_CASE("witness is sound") {
    const Ifs e = three_map(q(1, 5), q(3, 10));
    const auto v = is_symmetric(e, 2);
    REQUIRE(std::holds_alternative<AsymmetricWitness>(v));
    const auto& w = std::get<AsymmetricWitness>(v);
    const auto points = exact_points(e, w.depth);
    CHECK(std::find(points.begin(), points.end(), w.point) != points.end());
    CHECK(w.reflected == q(1) - w.point);
    CHECK_FALSE(contains_point(cover(e, w.depth).cover, w.reflected));
    REQUIRE(w.gap.has_value());
    CHECK(w.gap->contains(w.reflected));
  }

  TEST_CASE("three-map parameter grid") {
    std::size_t witnessed = 0;
    std::size_t certified = 0;
    std::size_t wrong = 0;
    for (long d = 2; d <= 12; ++d) {
      for (long n = 1; 3 * n < d; ++n) {
        const Rational rho(n, d);
        if (rho.denominator() != d) continue;
        for (long d2 = 1; d2 <= 12; ++d2) {
          for (long n2 = 0; n2 <= d2; ++n2) {
            const Rational lambda(n2, d2);
            if (lambda < rho || lambda > Rational(1) - Rational(2) * rho) continue;
            if (lambda.denominator() != d2) continue;
            const auto v = is_symmetric(three_map(rho, lambda), 2);
            const bool sym = lambda == (Rational(1) - rho) / Rational(2);
            if (sym) {
              const auto* c = std::get_if<SymmetricCertified>(&v);
              ++(c != nullptr && c->center == q(1, 2) ? certified : wrong);
            } else {
              ++(std::holds_alternative<AsymmetricWitness>(v) ? witnessed : wrong);
            }
          }
        }
      }
    }
    CHECK(wrong == 0);
    CHECK(certified > 5);
    CHECK(witnessed > 100);
  }
}

TEST_SUITE("dimension") {
  TEST_CASE("exact root") {
    const auto e = similarity_dimension(homogeneous_grid(q(1, 4), 2), Rational(mpq_class("1/1000000000000")));
    CHECK(e.contains(q(1, 2)));
    CHECK(e.width() <= Rational(mpq_class("1/1000000000000")));
    CHECK(similarity_dimension(equal_gap({q(1, 4), q(1, 4)}), q(1, 1000)).contains(q(1, 2)));
    CHECK(kind_of([] { (void)similarity_dimension(four_map_example(), q(0)); }) == ErrorKind::NonpositiveDelta);
  }

  TEST_CASE("irrational roots are enclosed") {
    const Rational tol(1, 1000000);
    const auto e = similarity_dimension(three_map(q(1, 5), q(3, 10)), tol);
    const double s = std::log(3.0) / std::log(5.0);
    CHECK(e.width() <= tol);
    CHECK(e.lo.to_double() <= s + 1e-12);
    CHECK(s - 1e-12 <= e.hi.to_double());

    const auto t = similarity_dimension(two_map(q(1, 4), q(1, 3)), tol);
    auto pressure = [](double x) { return std::pow(0.25, x) + std::pow(1.0 / 3.0, x) - 1.0; };
    CHECK(t.width() <= tol);
    CHECK(pressure(t.lo.to_double()) > 0.0);
    CHECK(pressure(t.hi.to_double()) < 0.0);

    const auto k = similarity_dimension(four_map_example(), tol);
    CHECK(k.lo.to_double() <= std::log10(4.0) + 1e-12);
    CHECK(std::log10(4.0) - 1e-12 <= k.hi.to_double());
  }
}
