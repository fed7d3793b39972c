#pragma once

#include "schottky/boundary_point.hpp"
#include "schottky/mobius.hpp"
#include "schottky/real.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace schottky {

// A geodesic of the upper half-plane, stored by its endpoints on R u {inf}.
//
// Finite circles have p < q and their interior is the open interval (p, q).
// A vertical line has q = inf; its interior is {x > p} or {x < p} according
// to the side recorded at construction (x > p by default).
class Semicircle {
public:
  Semicircle() = default;
  // Endpoints in either order. Throws DomainError if they coincide.
  Semicircle(BoundaryPoint x, BoundaryPoint y, bool line_interior_right = true);

  const BoundaryPoint& p() const noexcept { return p_; }
  const BoundaryPoint& q() const noexcept { return q_; }
  bool is_line() const noexcept { return q_.is_infinite(); }
  bool line_interior_right() const noexcept { return right_; }

  // Finite circles only; NestedRadicalError when the endpoints carry
  // different radicands.
  AlgebraicPoint center() const;
  AlgebraicPoint radius() const;

  double center_double() const;
  double radius_double() const;

  std::string str() const;

  friend bool operator==(const Semicircle& x, const Semicircle& y) {
    return x.p_ == y.p_ && x.q_ == y.q_ && (!x.is_line() || x.right_ == y.right_);
  }

private:
  BoundaryPoint p_{-1};
  BoundaryPoint q_{1};
  bool right_ = true;
};

// k = 1: positive real ray, k = 2: positive imaginary ray, k = 3: negative real ray.
enum class AxisRay { positive_real = 1, positive_imaginary = 2, negative_real = 3 };

struct GapInterval {
  AlgebraicPoint lo;
  AlgebraicPoint hi;
  AlgebraicPoint length;
};

enum class CircleRelation { disjoint, tangent, nested, identical, crossing };

std::string to_string(CircleRelation r);

// Throws DomainError for r <= 0.
Semicircle from_center_radius(const Rational& center, const Rational& radius);

Semicircle image_under_map(const Semicircle& circle, const MobiusMap& g);

// Strict interior test; endpoints are not interior.
bool interior_contains(const Semicircle& circle, const BoundaryPoint& x);

// True when x is one of the circle's endpoints.
bool on_circle(const Semicircle& circle, const BoundaryPoint& x);

// Relation of the closed endpoint intervals.
CircleRelation relation(const Semicircle& c1, const Semicircle& c2);
bool disjoint(const Semicircle& c1, const Semicircle& c2);
bool tangent(const Semicircle& c1, const Semicircle& c2);
bool nested(const Semicircle& c1, const Semicircle& c2);
// c1 strictly inside c2 (closed interval of c1 within the open interval of c2).
bool nested_inside(const Semicircle& inner, const Semicircle& outer);

// Exactly one of x, y interior. Throws TangentialDegeneracyError if either
// lies on the circle.
bool separates(const Semicircle& circle, const BoundaryPoint& x, const BoundaryPoint& y);

// All intersection values, ascending. For the real rays these are absolute
// values of endpoints on that side; for the imaginary ray, sqrt(r^2 - c^2)
// when |c| < r. A vertical line through 0 yields no isolated point.
std::vector<AlgebraicPoint> axis_intersections(const Semicircle& circle, AxisRay ray);

// The designated Y value on a ray: the outer (largest absolute) intersection.
std::optional<AlgebraicPoint> designated_intersection(const Semicircle& circle, AxisRay ray);

struct RayGap {
  AxisRay ray;
  AlgebraicPoint y_first;
  AlgebraicPoint y_second;
  Real distance;  // |y_first - y_second|
};

struct ConsecutiveGap {
  std::vector<RayGap> rays;  // rays met by both circles
  AxisRay max_ray = AxisRay::positive_real;
  Real z;
  // Exact |difference| when both designated values share a radicand.
  std::optional<AlgebraicPoint> z_exact;
};

// Z = max over common rays of |Y_j - Y_{j+1}|. Throws DomainError when the
// circles meet no common ray.
ConsecutiveGap consecutive_gap(const Semicircle& cj, const Semicircle& cj1);

// Maximal open sub-intervals of (window_lo, window_hi) not covered by any
// closed circle interval, ascending. Throws CrossingCirclesError if two input
// circles cross.
std::vector<GapInterval> gaps_on_real_line(std::span<const Semicircle> circles, const AlgebraicPoint& window_lo,
                                           const AlgebraicPoint& window_hi);

// Indices of some crossing pair, if any (O(n log n) laminarity sweep).
std::optional<std::pair<std::size_t, std::size_t>> find_crossing_pair(std::span<const Semicircle> circles);

}  // namespace schottky
