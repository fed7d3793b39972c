#include "schottky/mobius.hpp"

#include "schottky/errors.hpp"
#include "schottky/geometry.hpp"

#include <complex>
#include <limits>

namespace schottky {

std::string to_string(MapClass c) {
  switch (c) {
    case MapClass::hyperbolic: return "hyperbolic";
    case MapClass::parabolic: return "parabolic";
    case MapClass::elliptic: return "elliptic";
    case MapClass::identity: return "identity";
  }
  return "unknown";
}

MobiusMap::MobiusMap(Rational a, Rational b, Rational c, Rational d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (det().sign() <= 0) throw DomainError("Moebius map needs ad - bc > 0, got det " + to_string(det()));
}

MobiusMap MobiusMap::normalized() const {
  const Rational& s = !a_.is_zero() ? a_ : !b_.is_zero() ? b_ : c_;
  MobiusMap m;
  m.a_ = a_ / s;
  m.b_ = b_ / s;
  m.c_ = c_ / s;
  m.d_ = d_ / s;
  return m;
}

bool operator==(const MobiusMap& g, const MobiusMap& h) {
  // Rows (a,b,c,d) proportional: every 2x2 minor vanishes.
  return g.a_ * h.b_ == g.b_ * h.a_ && g.a_ * h.c_ == g.c_ * h.a_ && g.a_ * h.d_ == g.d_ * h.a_ &&
         g.b_ * h.c_ == g.c_ * h.b_ && g.b_ * h.d_ == g.d_ * h.b_ && g.c_ * h.d_ == g.d_ * h.c_;
}

std::string MobiusMap::str() const {
  return "[[" + to_string(a_) + ", " + to_string(b_) + "], [" + to_string(c_) + ", " + to_string(d_) + "]]";
}

MobiusMap compose(const MobiusMap& g, const MobiusMap& h) {
  return {g.a() * h.a() + g.b() * h.c(), g.a() * h.b() + g.b() * h.d(), g.c() * h.a() + g.d() * h.c(),
          g.c() * h.b() + g.d() * h.d()};
}

MobiusMap inverse(const MobiusMap& g) { return {g.d(), -g.b(), -g.c(), g.a()}; }

BoundaryPoint apply_boundary(const MobiusMap& g, const BoundaryPoint& x) {
  if (x.is_infinite()) {
    if (g.c().is_zero()) return BoundaryPoint::infinity();
    return BoundaryPoint(g.a() / g.c());
  }
  const AlgebraicPoint& z = x.value();
  const AlgebraicPoint den = AlgebraicPoint(g.c()) * z + AlgebraicPoint(g.d());
  if (den.sign() == 0) return BoundaryPoint::infinity();
  return BoundaryPoint((AlgebraicPoint(g.a()) * z + AlgebraicPoint(g.b())) / den);
}

InteriorPoint apply_interior(const MobiusMap& g, InteriorPoint z) {
  if (!(z.y > 0.0)) throw DomainError("apply_interior needs y > 0");
  const std::complex<double> w(z.x, z.y);
  const std::complex<double> r = (to_double(g.a()) * w + to_double(g.b())) / (to_double(g.c()) * w + to_double(g.d()));
  return {r.real(), r.imag()};
}

MapClass classify(const MobiusMap& g) {
  if (g.b().is_zero() && g.c().is_zero() && g.a() == g.d()) return MapClass::identity;
  const Rational tr = g.trace();
  const Rational tr2 = tr * tr;
  const Rational four_det = 4 * g.det();
  const int cmp = tr2 < four_det ? -1 : (tr2 == four_det ? 0 : 1);
  if (cmp > 0) return MapClass::hyperbolic;
  if (cmp == 0) return MapClass::parabolic;
  return MapClass::elliptic;
}

std::pair<BoundaryPoint, BoundaryPoint> fixed_points(const MobiusMap& g) {
  const MapClass cls = classify(g);
  if (cls == MapClass::identity) throw DomainError("identity fixes every point");
  if (cls == MapClass::elliptic) throw EllipticFixedPointError("elliptic map " + g.str() + " has no real fixed points");
  if (g.c().is_zero()) {
    // (a z + b) / d = z: a finite point b / (d - a) unless a == d (translation).
    if (g.a() == g.d()) return {BoundaryPoint::infinity(), BoundaryPoint::infinity()};
    return {BoundaryPoint(g.b() / (g.d() - g.a())), BoundaryPoint::infinity()};
  }
  // c z^2 + (d - a) z - b = 0.
  const Rational disc = (g.a() - g.d()) * (g.a() - g.d()) + 4 * g.b() * g.c();
  const Rational two_c = 2 * g.c();
  const Rational mid = (g.a() - g.d()) / two_c;
  const AlgebraicPoint offset(Rational(0), 1 / abs_value(two_c), disc);
  return {BoundaryPoint(AlgebraicPoint(mid) - offset), BoundaryPoint(AlgebraicPoint(mid) + offset)};
}

AlgebraicPoint boundary_derivative(const MobiusMap& g, const AlgebraicPoint& x) {
  const AlgebraicPoint den = AlgebraicPoint(g.c()) * x + AlgebraicPoint(g.d());
  if (den.sign() == 0) throw PoleError("derivative at the pole " + x.str() + " of " + g.str());
  return AlgebraicPoint(g.det()) / (den * den);
}

Semicircle isometric_circle(const MobiusMap& g) {
  if (g.c().is_zero()) throw DomainError("map with c = 0 has no isometric circle");
  const Rational center = -g.d() / g.c();
  const AlgebraicPoint radius(Rational(0), 1 / abs_value(g.c()), g.det());
  return {BoundaryPoint(AlgebraicPoint(center) - radius), BoundaryPoint(AlgebraicPoint(center) + radius)};
}

}  // namespace schottky

namespace schottky {

const AlgebraicPoint& BoundaryPoint::value() const {
  if (infinite_) throw DomainError("point at infinity has no finite value");
  return value_;
}

double BoundaryPoint::to_double() const {
  return infinite_ ? std::numeric_limits<double>::infinity() : value_.to_double();
}

}  // namespace schottky
