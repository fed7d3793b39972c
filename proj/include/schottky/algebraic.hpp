#pragma once

#include "schottky/rational.hpp"

#include <compare>
#include <string>

namespace schottky {

// Exact real number base + coeff * sqrt(radicand) with rational parts.
//
// Canonical form: radicand is a positive integer with small square factors
// pulled out into coeff, or coeff == radicand == 0 for a plain rational.
// Arithmetic between two values is defined when they share a radicand (or
// one is rational); anything else would need a second radical layer and
// throws NestedRadicalError. Comparison is exact for any pair.
class AlgebraicPoint {
public:
  AlgebraicPoint() = default;
  AlgebraicPoint(Rational value);  // NOLINT(google-explicit-constructor)
  AlgebraicPoint(long value) : AlgebraicPoint(Rational(value)) {}  // NOLINT
  AlgebraicPoint(Rational base, Rational coeff, Rational radicand);

  static AlgebraicPoint sqrt(const Rational& radicand);

  const Rational& base() const noexcept { return base_; }
  const Rational& coeff() const noexcept { return coeff_; }
  const Rational& radicand() const noexcept { return radicand_; }

  bool is_rational() const noexcept { return coeff_.is_zero(); }
  // Throws NestedRadicalError when the value is irrational.
  const Rational& as_rational() const;

  int sign() const;
  AlgebraicPoint conjugate() const { return {base_, -coeff_, radicand_}; }
  AlgebraicPoint abs() const { return sign() < 0 ? -*this : *this; }

  double to_double() const;
  // Human-readable form such as "51/19 + 1/19*sqrt(264)".
  std::string str() const;

  AlgebraicPoint operator-() const { return {-base_, -coeff_, radicand_}; }
  friend AlgebraicPoint operator+(const AlgebraicPoint& x, const AlgebraicPoint& y);
  friend AlgebraicPoint operator-(const AlgebraicPoint& x, const AlgebraicPoint& y);
  friend AlgebraicPoint operator*(const AlgebraicPoint& x, const AlgebraicPoint& y);
  friend AlgebraicPoint operator/(const AlgebraicPoint& x, const AlgebraicPoint& y);

  friend bool operator==(const AlgebraicPoint& x, const AlgebraicPoint& y) { return compare(x, y) == 0; }
  friend std::strong_ordering operator<=>(const AlgebraicPoint& x, const AlgebraicPoint& y) {
    const int c = compare(x, y);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  // Sign of x - y, exact even across different radicands.
  static int compare(const AlgebraicPoint& x, const AlgebraicPoint& y);

private:
  void canonicalize();

  Rational base_{0};
  Rational coeff_{0};
  Rational radicand_{0};
};

// Sign of a + b*sqrt(r) for rationals, r >= 0.
int sign_of(const Rational& a, const Rational& b, const Rational& r);

// A rational strictly between x < y (throws DomainError if x >= y).
Rational rational_between(const AlgebraicPoint& x, const AlgebraicPoint& y);

}  // namespace schottky
