#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace schottky {

// Exact rational in lowest terms with positive denominator (GMP mpq).
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

// "p/q" with q > 0; integers are still written with "/1".
std::string to_string(const Rational& r);

// Accepts "p/q", "p", and exact decimals such as "0.3", "-1.25e-3", "1e-12".
// Throws DomainError on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

inline int sign(const Rational& r) { return r.sign(); }

inline Rational abs_value(const Rational& r) { return r.sign() < 0 ? Rational(-r) : r; }

// Integer square root when `r` is the square of a rational.
bool exact_sqrt(const Rational& r, Rational& root);

double to_double(const Rational& r);

}  // namespace schottky
