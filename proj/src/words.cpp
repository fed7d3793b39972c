#include "schottky/words.hpp"

#include "schottky/errors.hpp"

namespace schottky {

std::string to_string(Letter x) {
  switch (x) {
    case Letter::A: return "A";
    case Letter::A_inv: return "A'";
    case Letter::B: return "B";
    case Letter::B_inv: return "B'";
  }
  return "?";
}

ReducedWord::ReducedWord(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (std::size_t i = 1; i < letters_.size(); ++i) {
    if (letters_[i] == inverse(letters_[i - 1])) throw DomainError("word is not reduced at position " + std::to_string(i));
  }
}

ReducedWord ReducedWord::parse(std::string_view text) {
  std::vector<Letter> letters;
  std::size_t i = 0;
  while (i < text.size()) {
    Letter x;
    if (text[i] == 'A') x = Letter::A;
    else if (text[i] == 'B') x = Letter::B;
    else throw DomainError("bad letter in word '" + std::string(text) + "'");
    ++i;
    if (i < text.size() && text[i] == '\'') {
      x = inverse(x);
      ++i;
    }
    letters.push_back(x);
    if (i < text.size()) {
      if (text[i] != '.') throw DomainError("expected '.' in word '" + std::string(text) + "'");
      ++i;
      if (i == text.size()) throw DomainError("trailing '.' in word '" + std::string(text) + "'");
    }
  }
  return ReducedWord(std::move(letters));
}

ReducedWord ReducedWord::extended(Letter x) const {
  if (!letters_.empty() && letters_.back() == inverse(x)) throw DomainError("extension cancels");
  ReducedWord w = *this;
  w.letters_.push_back(x);
  return w;
}

bool ReducedWord::concatenation_reduced(const ReducedWord& u, const ReducedWord& v) {
  return u.empty() || v.empty() || u.letters_.back() != inverse(v.letters_.front());
}

ReducedWord ReducedWord::concat(const ReducedWord& u, const ReducedWord& v) {
  std::vector<Letter> letters = u.letters_;
  letters.insert(letters.end(), v.letters_.begin(), v.letters_.end());
  return ReducedWord(std::move(letters));
}

std::string ReducedWord::str() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += '.';
    out += to_string(letters_[i]);
  }
  return out;
}

const MobiusMap& Generators::operator[](Letter x) const {
  switch (x) {
    case Letter::A: return a;
    case Letter::A_inv: return a_inverse;
    case Letter::B: return b;
    case Letter::B_inv: return b_inverse;
  }
  return a;
}

Generators make_generators(const MobiusMap& a, const MobiusMap& b) { return {a, b, inverse(a), inverse(b)}; }

std::vector<ReducedWord> enumerate_words(unsigned max_length) {
  std::vector<ReducedWord> out;
  std::vector<ReducedWord> layer{ReducedWord()};
  for (unsigned len = 1; len <= max_length; ++len) {
    std::vector<ReducedWord> next;
    next.reserve(layer.size() * 4);
    // Layers are built in lexicographic order, so extending in letter order keeps it.
    for (const auto& w : layer) {
      for (Letter x : kLetters) {
        if (!w.empty() && w.letters().back() == inverse(x)) continue;
        next.push_back(w.extended(x));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

MobiusMap word_map(const ReducedWord& w, const Generators& gens) {
  MobiusMap m = MobiusMap::identity();
  for (Letter x : w.letters()) m = compose(m, gens[x]);
  return m;
}

AlgebraicPoint chainrule_derivative(const ReducedWord& w, const AlgebraicPoint& x, const Generators& gens) {
  AlgebraicPoint point = x;
  AlgebraicPoint product(1);
  const auto& letters = w.letters();
  for (std::size_t i = letters.size(); i-- > 0;) {
    const MobiusMap& g = gens[letters[i]];
    try {
      product = product * boundary_derivative(g, point);
    } catch (const PoleError&) {
      const ReducedWord suffix(std::vector<Letter>(letters.begin() + static_cast<std::ptrdiff_t>(i), letters.end()));
      throw PoleError("pole of letter " + to_string(letters[i]) + " reached by suffix '" + suffix.str() + "' at " +
                      point.str());
    }
    point = apply_boundary(g, BoundaryPoint(point)).value();
  }
  return product;
}

}  // namespace schottky
