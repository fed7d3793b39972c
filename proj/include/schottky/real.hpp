#pragma once

#include "schottky/algebraic.hpp"
#include "schottky/rational.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <string>

namespace schottky {

// Runtime-precision binary floating point (MPFR) used for every quantity that
// is irrational by nature: sqrt(2.01), sqrt(kappa), tau, and the lemma bounds.
using Real = boost::multiprecision::mpfr_float;

inline constexpr unsigned kDefaultDigits = 50;

// Decimal digits in force: SCHOTTKY_PRECISION if set to an integer in
// [20, 1000], otherwise 50.
unsigned working_digits();

// Digits of the innermost live PrecisionScope on this thread, else working_digits().
unsigned current_digits();

// Sets the MPFR default precision for the calling thread while alive.
class PrecisionScope {
public:
  explicit PrecisionScope(unsigned digits10);
  PrecisionScope() : PrecisionScope(working_digits()) {}
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

  unsigned digits() const noexcept { return digits_; }

private:
  unsigned digits_;
  unsigned saved_;
  unsigned saved_digits_;
};

Real to_real(const Rational& r);
Real to_real(const AlgebraicPoint& x);

// Scientific notation with `digits` significant digits, e.g. "3.39...e-06".
std::string to_decimal_string(const Real& x, unsigned digits);

}  // namespace schottky
