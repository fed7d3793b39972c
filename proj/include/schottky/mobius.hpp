#pragma once

#include "schottky/boundary_point.hpp"
#include "schottky/rational.hpp"

#include <string>
#include <utility>

namespace schottky {

class Semicircle;

enum class MapClass { hyperbolic, parabolic, elliptic, identity };

std::string to_string(MapClass c);

struct InteriorPoint {
  double x = 0.0;
  double y = 1.0;
};

// Real Moebius map z -> (a z + b) / (c z + d) with ad - bc > 0.
//
// Entries are kept as given (no det-1 scaling); equality is projective.
class MobiusMap {
public:
  MobiusMap() = default;
  // Throws DomainError unless ad - bc > 0.
  MobiusMap(Rational a, Rational b, Rational c, Rational d);

  static MobiusMap identity() { return {}; }

  const Rational& a() const noexcept { return a_; }
  const Rational& b() const noexcept { return b_; }
  const Rational& c() const noexcept { return c_; }
  const Rational& d() const noexcept { return d_; }

  Rational det() const { return a_ * d_ - b_ * c_; }
  Rational trace() const { return a_ + d_; }

  // Representative scaled so that the first nonzero entry is 1.
  MobiusMap normalized() const;

  friend bool operator==(const MobiusMap& g, const MobiusMap& h);

  std::string str() const;

private:
  Rational a_{1}, b_{0}, c_{0}, d_{1};
};

// (g o h)(z) = g(h(z)); matrix product g * h.
MobiusMap compose(const MobiusMap& g, const MobiusMap& h);
// Adjugate [[d,-b],[-c,a]].
MobiusMap inverse(const MobiusMap& g);

// g(inf) = a/c, g(-d/c) = inf. Exact for every AlgebraicPoint input.
BoundaryPoint apply_boundary(const MobiusMap& g, const BoundaryPoint& x);

// Floating-point action on the upper half-plane; throws DomainError for y <= 0.
InteriorPoint apply_interior(const MobiusMap& g, InteriorPoint z);

MapClass classify(const MobiusMap& g);

// Real fixed points, ascending (infinity last). Parabolic maps return the
// double point twice. Throws EllipticFixedPointError for elliptic maps and
// DomainError for the identity.
std::pair<BoundaryPoint, BoundaryPoint> fixed_points(const MobiusMap& g);

// |g'(x)| = det / (c x + d)^2. Throws PoleError at x = -d/c.
AlgebraicPoint boundary_derivative(const MobiusMap& g, const AlgebraicPoint& x);

// The circle |c x + d|^2 = det. Throws DomainError when c == 0.
Semicircle isometric_circle(const MobiusMap& g);

}  // namespace schottky
