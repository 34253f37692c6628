#include "selfsim/similitude.hpp"

namespace selfsim {

Similitude::Similitude(Rational ratio, Rational offset) : ratio_(std::move(ratio)), offset_(std::move(offset)) {
  if (ratio_.is_zero()) throw Error(ErrorKind::ParameterOutOfRange, "similitude ratio must be non-zero");
}

Similitude Similitude::reflection(const Rational& center) { return {Rational(-1), center + center}; }

Interval Similitude::operator()(const Interval& i) const {
  Rational a = (*this)(i.lo);
  Rational b = (*this)(i.hi);
  if (ratio_.sign() < 0) return {std::move(b), std::move(a)};
  return {std::move(a), std::move(b)};
}

Rational Similitude::fixed_point() const {
  if (ratio_ == Rational(1)) throw Error(ErrorKind::ParameterOutOfRange, "ratio 1 has no unique fixed point");
  return offset_ / (Rational(1) - ratio_);
}

Similitude compose(const Similitude& f, const Similitude& g) {
  return {f.ratio() * g.ratio(), f.ratio() * g.offset() + f.offset()};
}

Similitude invert(const Similitude& f) {
  Rational inv = f.ratio().reciprocal();
  return {inv, -(f.offset() * inv)};
}

std::ostream& operator<<(std::ostream& os, const Similitude& f) {
  return os << "(" << f.ratio() << ", " << f.offset() << ")";
}

Word::Word(int alphabet, std::vector<int> letters_) : alphabet_size(alphabet), letters(std::move(letters_)) {
  if (alphabet_size < 1) throw Error(ErrorKind::ParameterOutOfRange, "alphabet size must be positive");
  for (int l : letters) {
    if (l < 1 || l > alphabet_size) {
      throw Error(ErrorKind::ParameterOutOfRange,
                  "letter " + std::to_string(l) + " outside 1.." + std::to_string(alphabet_size));
    }
  }
}

Word Word::appended(int letter) const {
  Word out = *this;
  out.letters.push_back(letter);
  return out;
}

std::string Word::str() const {
  if (letters.empty()) return "()";
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(letters[i]);
  }
  return out;
}

Word mirror_word(const Word& w) {
  Word out = w;
  for (int& l : out.letters) l = w.alphabet_size + 1 - l;
  return out;
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.str(); }

}  // namespace selfsim
