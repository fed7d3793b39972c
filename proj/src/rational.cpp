#include "schottky/rational.hpp"

#include "schottky/errors.hpp"

#include <regex>

namespace schottky {

std::string to_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

namespace {

Integer pow10(long exponent) {
  Integer result = 1;
  for (long i = 0; i < exponent; ++i) result *= 10;
  return result;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  static const std::regex fraction(R"(^([+-]?\d+)\s*/\s*(\d+)$)");
  static const std::regex decimal(R"(^([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?$)");
  const std::string s(text);
  std::smatch m;
  if (std::regex_match(s, m, fraction)) {
    Integer den(m[2].str());
    if (den.is_zero()) throw DomainError("zero denominator in '" + s + "'");
    return Rational(Integer(m[1].str()), den);
  }
  if (std::regex_match(s, m, decimal)) {
    const std::string whole = m[2].str();
    const std::string frac = m[3].matched ? m[3].str() : std::string();
    if (whole.empty() && frac.empty()) throw DomainError("not a number: '" + s + "'");
    long exponent = 0;
    if (m[4].matched) {
      const std::string e = m[4].str();
      if (e.size() > 6) throw DomainError("exponent out of range in '" + s + "'");
      exponent = std::stol(e);
    }
    Integer digits((whole.empty() ? std::string("0") : whole) + frac);
    exponent -= static_cast<long>(frac.size());
    Rational value = exponent >= 0 ? Rational(digits * pow10(exponent)) : Rational(digits, pow10(-exponent));
    return m[1].str() == "-" ? Rational(-value) : value;
  }
  throw DomainError("not an exact rational or decimal: '" + s + "'");
}

bool exact_sqrt(const Rational& r, Rational& root) {
  if (r.sign() < 0) return false;
  const Integer num = boost::multiprecision::numerator(r);
  const Integer den = boost::multiprecision::denominator(r);
  const Integer sn = boost::multiprecision::sqrt(num);
  const Integer sd = boost::multiprecision::sqrt(den);
  if (sn * sn != num || sd * sd != den) return false;
  root = Rational(sn, sd);
  return true;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace schottky
