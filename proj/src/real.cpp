#include "schottky/real.hpp"

#include <cstdlib>
#include <iomanip>
#include <sstream>
#include <string>

namespace schottky {

unsigned working_digits() {
  if (const char* env = std::getenv("SCHOTTKY_PRECISION")) {
    try {
      const long v = std::stol(env);
      if (v >= 20 && v <= 1000) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return kDefaultDigits;
}

namespace {
thread_local unsigned active_digits = 0;
}

unsigned current_digits() { return active_digits ? active_digits : working_digits(); }

PrecisionScope::PrecisionScope(unsigned digits10)
    : digits_(digits10), saved_(Real::default_precision()), saved_digits_(active_digits) {
  // Guard digits keep the last reported digit stable.
  Real::default_precision(digits10 + 10);
  active_digits = digits10;
}

PrecisionScope::~PrecisionScope() {
  Real::default_precision(saved_);
  active_digits = saved_digits_;
}

Real to_real(const Rational& r) {
  return Real(boost::multiprecision::numerator(r)) / Real(boost::multiprecision::denominator(r));
}

Real to_real(const AlgebraicPoint& x) {
  if (x.is_rational()) return to_real(x.base());
  return to_real(x.base()) + to_real(x.coeff()) * sqrt(to_real(x.radicand()));
}

std::string to_decimal_string(const Real& x, unsigned digits) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(static_cast<int>(digits) - 1) << x;
  return os.str();
}

}  // namespace schottky
