#include "schottky/algebraic.hpp"

#include "schottky/errors.hpp"

#include <cmath>

namespace schottky {

namespace {

// Square factors up to this bound are moved out of the radicand.
constexpr unsigned kSquareFactorBound = 2000;

std::string compact(const Rational& r) {
  const Integer den = boost::multiprecision::denominator(r);
  if (den == 1) return boost::multiprecision::numerator(r).str();
  return to_string(r);
}

bool same_radicand(const AlgebraicPoint& x, const AlgebraicPoint& y) {
  return x.is_rational() || y.is_rational() || x.radicand() == y.radicand();
}

const Rational& common_radicand(const AlgebraicPoint& x, const AlgebraicPoint& y) {
  return x.is_rational() ? y.radicand() : x.radicand();
}

[[noreturn]] void throw_incompatible(const AlgebraicPoint& x, const AlgebraicPoint& y, const char* op) {
  throw NestedRadicalError(std::string("cannot ") + op + " " + x.str() + " and " + y.str() +
                           " as a single radical");
}

// b + c * floor(sqrt(r) * 10^k) / 10^k, within |c| * 10^-k of the true value.
Rational approximate(const AlgebraicPoint& x, unsigned k) {
  if (x.is_rational()) return x.base();
  Integer scale = 1;
  for (unsigned i = 0; i < k; ++i) scale *= 10;
  const Integer rad = boost::multiprecision::numerator(x.radicand());
  const Integer scaled = rad * scale * scale;
  const Integer root = boost::multiprecision::sqrt(scaled);
  return x.base() + x.coeff() * Rational(root, scale);
}

}  // namespace

int sign_of(const Rational& a, const Rational& b, const Rational& r) {
  const int sa = a.sign();
  const int sb = (r.is_zero() ? 0 : b.sign());
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  const Rational lhs = a * a;
  const Rational rhs = b * b * r;
  if (lhs > rhs) return sa;
  if (lhs < rhs) return sb;
  return 0;
}

AlgebraicPoint::AlgebraicPoint(Rational value) : base_(std::move(value)) {}

AlgebraicPoint::AlgebraicPoint(Rational base, Rational coeff, Rational radicand)
    : base_(std::move(base)), coeff_(std::move(coeff)), radicand_(std::move(radicand)) {
  canonicalize();
}

AlgebraicPoint AlgebraicPoint::sqrt(const Rational& radicand) {
  if (radicand.sign() < 0) throw DomainError("square root of negative rational " + to_string(radicand));
  return {Rational(0), Rational(1), radicand};
}

void AlgebraicPoint::canonicalize() {
  if (radicand_.sign() < 0) throw DomainError("negative radicand " + to_string(radicand_));
  if (coeff_.is_zero() || radicand_.is_zero()) {
    coeff_ = 0;
    radicand_ = 0;
    return;
  }
  const Integer den = boost::multiprecision::denominator(radicand_);
  Integer n = boost::multiprecision::numerator(radicand_) * den;
  coeff_ /= den;
  Integer pulled = 1;
  for (unsigned p = 2; p <= kSquareFactorBound; ++p) {
    const Integer sq = Integer(p) * p;
    if (sq > n) break;
    while (n % sq == 0) {
      n /= sq;
      pulled *= p;
    }
  }
  coeff_ *= Rational(pulled);
  const Integer root = boost::multiprecision::sqrt(n);
  if (root * root == n) {
    base_ += coeff_ * Rational(root);
    coeff_ = 0;
    radicand_ = 0;
    return;
  }
  radicand_ = Rational(n);
}

const Rational& AlgebraicPoint::as_rational() const {
  if (!is_rational()) throw NestedRadicalError(str() + " is irrational");
  return base_;
}

int AlgebraicPoint::sign() const { return sign_of(base_, coeff_, radicand_); }

double AlgebraicPoint::to_double() const {
  if (is_rational()) return schottky::to_double(base_);
  return schottky::to_double(base_) + schottky::to_double(coeff_) * std::sqrt(schottky::to_double(radicand_));
}

std::string AlgebraicPoint::str() const {
  if (is_rational()) return compact(base_);
  std::string out;
  if (!base_.is_zero()) out = compact(base_) + (coeff_.sign() < 0 ? " - " : " + ");
  else if (coeff_.sign() < 0) out = "-";
  const Rational c = abs_value(coeff_);
  if (c != 1) out += compact(c) + "*";
  return out + "sqrt(" + compact(radicand_) + ")";
}

AlgebraicPoint operator+(const AlgebraicPoint& x, const AlgebraicPoint& y) {
  if (!same_radicand(x, y)) throw_incompatible(x, y, "add");
  return {x.base_ + y.base_, x.coeff_ + y.coeff_, common_radicand(x, y)};
}

AlgebraicPoint operator-(const AlgebraicPoint& x, const AlgebraicPoint& y) {
  if (!same_radicand(x, y)) throw_incompatible(x, y, "subtract");
  return {x.base_ - y.base_, x.coeff_ - y.coeff_, common_radicand(x, y)};
}

AlgebraicPoint operator*(const AlgebraicPoint& x, const AlgebraicPoint& y) {
  if (!same_radicand(x, y)) throw_incompatible(x, y, "multiply");
  const Rational& r = common_radicand(x, y);
  return {x.base_ * y.base_ + x.coeff_ * y.coeff_ * r, x.base_ * y.coeff_ + x.coeff_ * y.base_, r};
}

AlgebraicPoint operator/(const AlgebraicPoint& x, const AlgebraicPoint& y) {
  if (y.sign() == 0) throw DomainError("division by zero");
  if (y.is_rational()) return {x.base_ / y.base_, x.coeff_ / y.base_, x.radicand_};
  if (!same_radicand(x, y)) throw_incompatible(x, y, "divide");
  // Rationalize: x * conj(y) / (b^2 - c^2 r); the norm is nonzero since sqrt(r) is irrational.
  const Rational norm = y.base_ * y.base_ - y.coeff_ * y.coeff_ * y.radicand_;
  const AlgebraicPoint num = x * y.conjugate();
  return {num.base_ / norm, num.coeff_ / norm, num.radicand_};
}

int AlgebraicPoint::compare(const AlgebraicPoint& x, const AlgebraicPoint& y) {
  if (same_radicand(x, y)) return (x - y).sign();
  // sign(u - v) with u = A + B sqrt(r), v = C sqrt(s).
  const Rational a = x.base_ - y.base_;
  const Rational& b = x.coeff_;
  const Rational& r = x.radicand_;
  const Rational& c = y.coeff_;
  const Rational& s = y.radicand_;
  const int su = sign_of(a, b, r);
  const int sv = c.sign();
  if (su == 0) return -sv;
  if (sv == 0 || su != sv) return su;
  // Same sign: compare magnitudes through u^2 - v^2.
  const int w = sign_of(a * a + b * b * r - c * c * s, 2 * a * b, r);
  return su > 0 ? w : -w;
}

Rational rational_between(const AlgebraicPoint& x, const AlgebraicPoint& y) {
  if (!(x < y)) throw DomainError("rational_between needs x < y");
  if (x.is_rational() && y.is_rational()) return (x.base() + y.base()) / 2;
  for (unsigned k = 8;; k *= 2) {
    const Rational m = (approximate(x, k) + approximate(y, k)) / 2;
    if (x < AlgebraicPoint(m) && AlgebraicPoint(m) < y) return m;
  }
}

}  // namespace schottky
