#include "schottky/errors.hpp"
#include "schottky/geometry.hpp"
#include "schottky/mobius.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>

using namespace schottky;
using testing_support::M;
using testing_support::Q;
using testing_support::surd;

namespace {

const MobiusMap h1 = M(2, 3, 1, 2);   // h* at lambda 2, kappa 0
const MobiusMap h2 = M(4, 15, 1, 4);  // h** at lambda 2, kappa 0

}  // namespace

TEST_CASE("rational parsing keeps decimals exact") {
  CHECK(Q("1e-12") == Rational(1, 1000000000000LL));
  CHECK(Q("0.3") == Rational(3, 10));
  CHECK(Q("1.6666666667") == Rational(16666666667LL, 10000000000LL));
  CHECK(Q("-5/3") == Rational(-5, 3));
  CHECK(Q("4e-12") == Rational(1, 250000000000LL));
  CHECK(to_string(Rational(2)) == "2/1");
  CHECK_THROWS_AS(Q("abc"), DomainError);
  CHECK_THROWS_AS(Q("1/0"), DomainError);
}

TEST_CASE("algebraic points compare exactly across radicands") {
  const AlgebraicPoint r15 = AlgebraicPoint::sqrt(15);
  CHECK(r15 * r15 == AlgebraicPoint(15));
  CHECK(AlgebraicPoint(3) < r15);
  CHECK(r15 < AlgebraicPoint(4));
  CHECK(AlgebraicPoint::sqrt(12) == surd("0", "2", "3"));
  CHECK(AlgebraicPoint::sqrt(14) < AlgebraicPoint::sqrt(15));
  CHECK(surd("1", "1", "2") > AlgebraicPoint::sqrt(5));  // 2.414 > 2.236
  CHECK(AlgebraicPoint::sqrt(Q("49/4")).is_rational());
  CHECK_THROWS_AS(AlgebraicPoint::sqrt(2) + AlgebraicPoint::sqrt(3), NestedRadicalError);
  const Rational m = rational_between(AlgebraicPoint::sqrt(2), AlgebraicPoint::sqrt(3));
  CHECK(AlgebraicPoint(m) > AlgebraicPoint::sqrt(2));
  CHECK(AlgebraicPoint(m) < AlgebraicPoint::sqrt(3));
}

TEST_CASE("compose") {
  CHECK(compose(MobiusMap::identity(), h1) == h1);
  CHECK(compose(h1, inverse(h1)) == MobiusMap::identity());
  const MobiusMap p = compose(h1, h2);
  CHECK(p.a() == 11);
  CHECK(p.b() == 42);
  CHECK(p.c() == 6);
  CHECK(p.d() == 23);
}

TEST_CASE("inverse") {
  CHECK(inverse(MobiusMap::identity()) == MobiusMap::identity());
  const MobiusMap g = inverse(h2);
  CHECK(g.a() == 4);
  CHECK(g.b() == -15);
  CHECK(g.c() == -1);
  CHECK(g.d() == 4);
  const MobiusMap odd(Q("3/7"), Q("-2"), Q("5/3"), Q("1/2"));
  CHECK(inverse(inverse(odd)) == odd);
  CHECK_THROWS_AS(MobiusMap(Rational(1), Rational(2), Rational(2), Rational(4)), DomainError);
  CHECK_THROWS_AS(MobiusMap(Rational(0), Rational(1), Rational(1), Rational(0)), DomainError);
}

TEST_CASE("projective equality ignores scaling") {
  CHECK(M(2, 4, 2, 6) == M(1, 2, 1, 3));
  CHECK(M(-2, -3, -1, -2) == h1);
  CHECK_FALSE(M(2, 3, 1, 3) == h1);
}

TEST_CASE("apply_boundary") {
  CHECK(apply_boundary(h1, BoundaryPoint(0)) == BoundaryPoint(Q("3/2")));
  CHECK(apply_boundary(h1, BoundaryPoint::infinity()) == BoundaryPoint(2));
  CHECK(apply_boundary(h1, BoundaryPoint(-2)).is_infinite());
  CHECK(apply_boundary(M(1, 1, 0, 1), BoundaryPoint::infinity()).is_infinite());
  // h*(sqrt15) = (2 sqrt15 + 3)/(sqrt15 + 2)
  const BoundaryPoint y = apply_boundary(h1, BoundaryPoint(AlgebraicPoint::sqrt(15)));
  CHECK(std::abs(y.to_double() - (2 * std::sqrt(15.0) + 3) / (std::sqrt(15.0) + 2)) < 1e-14);
}

TEST_CASE("apply_interior") {
  const auto id = apply_interior(MobiusMap::identity(), {0.0, 1.0});
  CHECK(id.x == doctest::Approx(0.0));
  CHECK(id.y == doctest::Approx(1.0));
  const auto z = apply_interior(h1, {0.0, 1.0});
  CHECK(z.x == doctest::Approx(8.0 / 5));
  CHECK(z.y == doctest::Approx(1.0 / 5));
  CHECK_THROWS_AS(apply_interior(h1, {0.0, 0.0}), DomainError);
}

TEST_CASE("classify") {
  CHECK(classify(M(0, -1, 1, 0)) == MapClass::elliptic);
  CHECK(classify(h1) == MapClass::hyperbolic);
  CHECK(classify(M(1, 1, 0, 1)) == MapClass::parabolic);
  CHECK(classify(MobiusMap::identity()) == MapClass::identity);
  CHECK(classify(M(3, 0, 0, 3)) == MapClass::identity);
}

TEST_CASE("fixed_points") {
  const auto [u, v] = fixed_points(h2);
  CHECK(u == BoundaryPoint(-AlgebraicPoint::sqrt(15)));
  CHECK(v == BoundaryPoint(AlgebraicPoint::sqrt(15)));
  const auto [s, t] = fixed_points(h1);
  CHECK(s == BoundaryPoint(-AlgebraicPoint::sqrt(3)));
  CHECK(t == BoundaryPoint(AlgebraicPoint::sqrt(3)));
  const auto [d0, d1] = fixed_points(M(139, -492, 76, -269));
  CHECK(d0 == BoundaryPoint(surd("51/19", "-1/19", "264")));
  CHECK(d1 == BoundaryPoint(surd("51/19", "1/19", "264")));
  // Affine map z -> 2z + 3 fixes -3 and infinity.
  const auto [a0, a1] = fixed_points(M(2, 3, 0, 1));
  CHECK(a0 == BoundaryPoint(-3));
  CHECK(a1.is_infinite());
  const auto [p0, p1] = fixed_points(M(1, 1, 0, 1));
  CHECK(p0.is_infinite());
  CHECK(p1.is_infinite());
  // Parabolic with c != 0 has a doubled finite fixed point.
  const auto [q0, q1] = fixed_points(M(1, 0, 1, 1));
  CHECK(q0 == BoundaryPoint(0));
  CHECK(q1 == BoundaryPoint(0));
  CHECK_THROWS_AS(fixed_points(M(0, -1, 1, 0)), EllipticFixedPointError);
}

TEST_CASE("boundary_derivative") {
  CHECK(boundary_derivative(h1, 0) == AlgebraicPoint(Q("1/4")));
  CHECK(boundary_derivative(h1, -1) == AlgebraicPoint(1));  // -lambda + (1 - kappa) sits on SC3
  CHECK(boundary_derivative(MobiusMap::identity(), Q("17/3")) == AlgebraicPoint(1));
  CHECK_THROWS_AS(boundary_derivative(h1, -2), PoleError);
}

TEST_CASE("isometric_circle") {
  const PaperParams p = testing_support::params("2", "1e-12");
  const GeneratorPair g = build_generators(p);
  const SchottkySystem sys = build_circles(p);
  CHECK(isometric_circle(g.h1) == sys.circles[2]);
  CHECK(isometric_circle(g.h2) == sys.circles[3]);
  CHECK(isometric_circle(inverse(g.h1)) == sys.circles[1]);
  CHECK(isometric_circle(inverse(g.h2)) == sys.circles[0]);
  CHECK_THROWS_AS(isometric_circle(M(2, 3, 0, 1)), DomainError);
}
