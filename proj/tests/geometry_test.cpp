#include "schottky/errors.hpp"
#include "schottky/geometry.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>

using namespace schottky;
using testing_support::M;
using testing_support::Q;

namespace {

Semicircle C(const char* p, const char* q) { return {BoundaryPoint(Q(p)), BoundaryPoint(Q(q))}; }

double as_double(const Real& x) { return x.convert_to<double>(); }

const Rational kTiny = Q("1e-12");

}  // namespace

TEST_CASE("from_center_radius") {
  const Semicircle sc1 = from_center_radius(4, 1 - kTiny);
  CHECK(sc1.p() == BoundaryPoint(Rational(3) + kTiny));
  CHECK(sc1.q() == BoundaryPoint(Rational(5) - kTiny));
  CHECK(from_center_radius(0, 1) == C("-1", "1"));
  CHECK(from_center_radius(-2, 1) == C("-3", "-1"));
  CHECK_THROWS_AS(from_center_radius(0, 0), DomainError);
  CHECK_THROWS_AS(from_center_radius(0, -1), DomainError);
}

TEST_CASE("image_under_map") {
  const SchottkySystem sys = build_circles(testing_support::params("2", "1/3"));
  CHECK(image_under_map(sys.circles[2], sys.pairings[0].map) == sys.circles[1]);
  CHECK(image_under_map(sys.circles[0], MobiusMap::identity()) == sys.circles[0]);

  const Semicircle line = image_under_map(C("-2", "0"), M(2, 3, 1, 2));
  CHECK(line.is_line());
  CHECK(line.p() == BoundaryPoint(Q("3/2")));
  // The interior of (-2, 0) contains -1, and h*(-1) = 1 lies left of 3/2.
  CHECK_FALSE(line.line_interior_right());
  CHECK(interior_contains(line, BoundaryPoint(1)));
}

TEST_CASE("interior_contains") {
  const SchottkySystem sys = build_circles(testing_support::params("2", "1e-12"));
  const AlgebraicPoint r15 = AlgebraicPoint::sqrt(15);
  CHECK(interior_contains(sys.circles[3], BoundaryPoint(-r15)));
  CHECK_FALSE(interior_contains(sys.circles[3], BoundaryPoint(r15)));
  CHECK(interior_contains(C("-1", "1"), BoundaryPoint(0)));
  CHECK_FALSE(interior_contains(C("-1", "1"), BoundaryPoint(1)));
  CHECK_FALSE(interior_contains(C("-1", "1"), BoundaryPoint::infinity()));
  CHECK(on_circle(C("-1", "1"), BoundaryPoint(-1)));
}

TEST_CASE("disjoint, tangent and nested") {
  const SchottkySystem open = build_circles(testing_support::params("2", "1e-12"));
  const SchottkySystem shut = build_circles(testing_support::params("2", "0"));
  CHECK(disjoint(open.circles[0], open.circles[1]));
  CHECK(relation(open.circles[0], open.circles[1]) == CircleRelation::disjoint);
  CHECK(tangent(shut.circles[0], shut.circles[1]));
  CHECK(nested(C("-1", "1"), C("-1/2", "1/2")));
  CHECK(nested_inside(C("-1/2", "1/2"), C("-1", "1")));
  CHECK(relation(C("-1", "1"), C("0", "2")) == CircleRelation::crossing);
  CHECK(relation(C("-1", "1"), C("-1", "1")) == CircleRelation::identical);
  // Internally tangent circles share an endpoint.
  CHECK(relation(C("-1", "1"), C("-1", "0")) == CircleRelation::tangent);
}

TEST_CASE("separates") {
  const SchottkySystem sys = build_circles(testing_support::params("2", "1e-12"));
  const AlgebraicPoint r15 = AlgebraicPoint::sqrt(15);
  CHECK(separates(sys.circles[3], BoundaryPoint(r15), BoundaryPoint(-r15)));
  CHECK_FALSE(separates(C("-1", "1"), BoundaryPoint(-2), BoundaryPoint(2)));
  CHECK(separates(C("-1", "1"), BoundaryPoint(0), BoundaryPoint(2)));
  CHECK_THROWS_AS(separates(C("-1", "1"), BoundaryPoint(1), BoundaryPoint(2)), TangentialDegeneracyError);
}

TEST_CASE("axis_intersections") {
  const Semicircle sym = C("-2", "2");
  CHECK(axis_intersections(sym, AxisRay::positive_real) == std::vector<AlgebraicPoint>{2});
  CHECK(axis_intersections(sym, AxisRay::positive_imaginary) == std::vector<AlgebraicPoint>{2});
  CHECK(axis_intersections(sym, AxisRay::negative_real) == std::vector<AlgebraicPoint>{2});

  const Semicircle sc1 = C("3", "5");
  CHECK(axis_intersections(sc1, AxisRay::positive_real) == std::vector<AlgebraicPoint>{3, 5});
  CHECK(axis_intersections(sc1, AxisRay::positive_imaginary).empty());
  CHECK(axis_intersections(sc1, AxisRay::negative_real).empty());

  CHECK(axis_intersections(C("-1", "3"), AxisRay::positive_imaginary) ==
        std::vector<AlgebraicPoint>{AlgebraicPoint::sqrt(3)});
  CHECK(designated_intersection(sc1, AxisRay::positive_real) == AlgebraicPoint(5));
}

TEST_CASE("consecutive_gap") {
  CHECK(as_double(consecutive_gap(C("-2", "2"), C("-2", "2")).z) == doctest::Approx(0.0));

  const ConsecutiveGap g = consecutive_gap(C("-2", "2"), C("-3", "3"));
  CHECK(g.rays.size() == 3);
  CHECK(as_double(g.z) == doctest::Approx(1.0));

  const ConsecutiveGap h = consecutive_gap(C("-2", "2"), C("-2", "4"));
  CHECK(as_double(h.z) == doctest::Approx(2.0));
  CHECK(h.max_ray == AxisRay::positive_real);
  REQUIRE(h.z_exact.has_value());
  CHECK(*h.z_exact == AlgebraicPoint(2));
  // Imaginary ray: |2 - sqrt(8)|, independent double oracle.
  for (const auto& ray : h.rays) {
    if (ray.ray == AxisRay::positive_imaginary) CHECK(as_double(ray.distance) == doctest::Approx(std::sqrt(8.0) - 2));
    if (ray.ray == AxisRay::negative_real) CHECK(as_double(ray.distance) == doctest::Approx(0.0));
  }
  CHECK_THROWS_AS(consecutive_gap(C("1", "2"), C("-3", "-2")), DomainError);
}

TEST_CASE("gaps_on_real_line") {
  const std::vector<Semicircle> none;
  const auto one = gaps_on_real_line(none, -1, 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].lo == AlgebraicPoint(-1));
  CHECK(one[0].hi == AlgebraicPoint(1));

  const SchottkySystem sys = build_circles(testing_support::params("2", "1e-12"));
  const std::vector<Semicircle> base(sys.circles.begin(), sys.circles.end());
  const auto five = gaps_on_real_line(base, -6, 6);
  REQUIRE(five.size() == 5);
  CHECK(five[3].lo == AlgebraicPoint(Rational(3) - kTiny));
  CHECK(five[3].hi == AlgebraicPoint(Rational(3) + kTiny));
  CHECK(five[3].length == AlgebraicPoint(2 * kTiny));

  const std::vector<Semicircle> cover{C("-1", "1")};
  CHECK(gaps_on_real_line(cover, -1, 1).empty());

  const std::vector<Semicircle> crossing{C("-1", "1"), C("0", "2")};
  CHECK_THROWS_AS(gaps_on_real_line(crossing, -3, 3), CrossingCirclesError);
}

TEST_CASE("find_crossing_pair") {
  const std::vector<Semicircle> laminar{C("-4", "4"), C("-3", "-1"), C("1", "3"), C("3/2", "2"), C("5", "6")};
  CHECK_FALSE(find_crossing_pair(laminar).has_value());
  const std::vector<Semicircle> bad{C("-4", "4"), C("1", "3"), C("2", "5")};
  const auto pair = find_crossing_pair(bad);
  REQUIRE(pair.has_value());
  CHECK(relation(bad[pair->first], bad[pair->second]) == CircleRelation::crossing);
}
