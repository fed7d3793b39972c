#pragma once

#include "schottky/mobius.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace schottky {

// Letters of the rank-2 free group, in lexicographic order.
enum class Letter : std::uint8_t { A = 0, A_inv = 1, B = 2, B_inv = 3 };

inline constexpr Letter kLetters[] = {Letter::A, Letter::A_inv, Letter::B, Letter::B_inv};

constexpr Letter inverse(Letter x) {
  return static_cast<Letter>(static_cast<std::uint8_t>(x) ^ 1U);
}

std::string to_string(Letter x);

// A reduced word; letters()[0] is applied last (leftmost factor).
class ReducedWord {
public:
  ReducedWord() = default;
  // Throws DomainError if two adjacent letters cancel.
  explicit ReducedWord(std::vector<Letter> letters);

  // "A.B.A'" style; empty word is "".
  static ReducedWord parse(std::string_view text);

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  // Appending must keep the word reduced; throws DomainError otherwise.
  ReducedWord extended(Letter x) const;
  // True when u.v is reduced (no cancellation at the seam).
  static bool concatenation_reduced(const ReducedWord& u, const ReducedWord& v);
  static ReducedWord concat(const ReducedWord& u, const ReducedWord& v);

  std::string str() const;

  friend auto operator<=>(const ReducedWord&, const ReducedWord&) = default;

private:
  std::vector<Letter> letters_;
};

struct Generators {
  MobiusMap a;  // h*
  MobiusMap b;  // h**
  const MobiusMap& operator[](Letter x) const;
  MobiusMap a_inverse;
  MobiusMap b_inverse;
};

Generators make_generators(const MobiusMap& a, const MobiusMap& b);

// All reduced words of length 1..max_length, ordered by length then
// lexicographically (A < A' < B < B'). max_length == 0 gives an empty list.
std::vector<ReducedWord> enumerate_words(unsigned max_length);

// Product of the letter matrices, left to right. Empty word -> identity.
MobiusMap word_map(const ReducedWord& w, const Generators& gens);

// Product of letter derivatives along the chain x -> s_n(x) -> ... .
// Throws PoleError naming the suffix that hits a pole.
AlgebraicPoint chainrule_derivative(const ReducedWord& w, const AlgebraicPoint& x, const Generators& gens);

}  // namespace schottky
