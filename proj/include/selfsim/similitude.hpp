#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "selfsim/interval_set.hpp"
#include "selfsim/rational.hpp"

namespace selfsim {

/// Affine map x -> ratio * x + offset with ratio != 0.
class Similitude {
 public:
  Similitude() : ratio_(1), offset_(0) {}
  Similitude(Rational ratio, Rational offset);

  static Similitude identity() { return {}; }
  /// x -> 2 * center - x.
  static Similitude reflection(const Rational& center);

  const Rational& ratio() const { return ratio_; }
  const Rational& offset() const { return offset_; }

  bool is_contractive() const { return ratio_.abs() < Rational(1); }
  bool is_identity() const { return ratio_ == Rational(1) && offset_.is_zero(); }

  Rational operator()(const Rational& x) const { return ratio_ * x + offset_; }
  Interval operator()(const Interval& i) const;
  IntervalSet operator()(const IntervalSet& s) const { return s.affine_image(ratio_, offset_); }

  /// offset / (1 - ratio). Throws ParameterOutOfRange for ratio 1.
  Rational fixed_point() const;

  friend bool operator==(const Similitude&, const Similitude&) = default;

 private:
  Rational ratio_;
  Rational offset_;
};

inline Rational apply(const Similitude& f, const Rational& x) { return f(x); }

/// (f o g)(x) = f(g(x)).
Similitude compose(const Similitude& f, const Similitude& g);
Similitude invert(const Similitude& f);

std::ostream& operator<<(std::ostream& os, const Similitude& f);

/// Finite word over {1..alphabet_size}; the empty word indexes the identity.
struct Word {
  int alphabet_size = 2;
  std::vector<int> letters;

  Word() = default;
  Word(int alphabet, std::vector<int> letters_);

  std::size_t length() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  Word appended(int letter) const;
  /// Letters separated by spaces; "()" for the empty word.
  std::string str() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) {
    if (a.letters.size() != b.letters.size()) return a.letters.size() <=> b.letters.size();
    return a.letters <=> b.letters;
  }
};

/// Letter-wise j = m + 1 - i.
Word mirror_word(const Word& w);

std::ostream& operator<<(std::ostream& os, const Word& w);

}  // namespace selfsim
