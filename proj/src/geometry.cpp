#include "schottky/geometry.hpp"

#include "schottky/errors.hpp"

#include <algorithm>
#include <numeric>

namespace schottky {

namespace {

// Point of the extended real line used for interval logic: -inf, finite, +inf.
struct Ext {
  int inf = 0;
  AlgebraicPoint v;

  static Ext finite(const AlgebraicPoint& x) { return {0, x}; }
  static Ext lo_inf() { return {-1, AlgebraicPoint()}; }
  static Ext hi_inf() { return {1, AlgebraicPoint()}; }

  friend bool operator==(const Ext& x, const Ext& y) { return x.inf == y.inf && (x.inf != 0 || x.v == y.v); }
  friend bool operator<(const Ext& x, const Ext& y) {
    if (x.inf != y.inf) return x.inf < y.inf;
    return x.inf == 0 && x.v < y.v;
  }
};

struct Interval {
  Ext lo;
  Ext hi;
};

// Closed endpoint interval covered by the circle's half-disk.
Interval covered(const Semicircle& c) {
  if (!c.is_line()) return {Ext::finite(c.p().value()), Ext::finite(c.q().value())};
  if (c.line_interior_right()) return {Ext::finite(c.p().value()), Ext::hi_inf()};
  return {Ext::lo_inf(), Ext::finite(c.p().value())};
}

CircleRelation interval_relation(const Interval& x, const Interval& y) {
  if (x.lo == y.lo && x.hi == y.hi) return CircleRelation::identical;
  if (x.hi < y.lo || y.hi < x.lo) return CircleRelation::disjoint;
  if (x.hi == y.lo || y.hi == x.lo) return CircleRelation::tangent;
  const bool x_in_y = !(x.lo < y.lo) && !(y.hi < x.hi);
  const bool y_in_x = !(y.lo < x.lo) && !(x.hi < y.hi);
  if (x.lo == y.lo || x.hi == y.hi) {
    if (x_in_y || y_in_x) return CircleRelation::tangent;
    return CircleRelation::crossing;
  }
  if (x_in_y || y_in_x) return CircleRelation::nested;
  return CircleRelation::crossing;
}

}  // namespace

std::string to_string(CircleRelation r) {
  switch (r) {
    case CircleRelation::disjoint: return "disjoint";
    case CircleRelation::tangent: return "tangent";
    case CircleRelation::nested: return "nested";
    case CircleRelation::identical: return "identical";
    case CircleRelation::crossing: return "crossing";
  }
  return "unknown";
}

Semicircle::Semicircle(BoundaryPoint x, BoundaryPoint y, bool line_interior_right) : right_(line_interior_right) {
  if (x == y) throw DomainError("semicircle endpoints coincide at " + x.str());
  if (y < x) std::swap(x, y);
  p_ = std::move(x);
  q_ = std::move(y);
}

AlgebraicPoint Semicircle::center() const {
  if (is_line()) throw DomainError("vertical line has no center");
  return (p_.value() + q_.value()) / AlgebraicPoint(2);
}

AlgebraicPoint Semicircle::radius() const {
  if (is_line()) throw DomainError("vertical line has no radius");
  return (q_.value() - p_.value()) / AlgebraicPoint(2);
}

double Semicircle::center_double() const { return 0.5 * (p_.to_double() + q_.to_double()); }
double Semicircle::radius_double() const { return 0.5 * (q_.to_double() - p_.to_double()); }

std::string Semicircle::str() const {
  if (is_line()) return std::string("line(") + p_.str() + (right_ ? ", right)" : ", left)");
  return "(" + p_.str() + ", " + q_.str() + ")";
}

Semicircle from_center_radius(const Rational& center, const Rational& radius) {
  if (radius.sign() <= 0) throw DomainError("radius must be positive, got " + to_string(radius));
  return {BoundaryPoint(center - radius), BoundaryPoint(center + radius)};
}

Semicircle image_under_map(const Semicircle& circle, const MobiusMap& g) {
  BoundaryPoint gp = apply_boundary(g, circle.p());
  BoundaryPoint gq = apply_boundary(g, circle.q());
  if (gp.is_finite() && gq.is_finite()) return {std::move(gp), std::move(gq)};
  // Image is a vertical line; its interior side is where an interior point lands.
  Rational probe;
  if (!circle.is_line()) {
    probe = rational_between(circle.p().value(), circle.q().value());
  } else {
    const AlgebraicPoint& a = circle.p().value();
    probe = circle.line_interior_right() ? rational_between(a, a + AlgebraicPoint(2))
                                         : rational_between(a - AlgebraicPoint(2), a);
  }
  const BoundaryPoint finite = gp.is_finite() ? gp : gq;
  const BoundaryPoint image = apply_boundary(g, BoundaryPoint(probe));
  return {finite, BoundaryPoint::infinity(), finite < image};
}

bool interior_contains(const Semicircle& circle, const BoundaryPoint& x) {
  if (x.is_infinite()) return false;
  if (!circle.is_line()) return circle.p() < x && x < circle.q();
  return circle.line_interior_right() ? circle.p() < x : x < circle.p();
}

bool on_circle(const Semicircle& circle, const BoundaryPoint& x) { return x == circle.p() || x == circle.q(); }

CircleRelation relation(const Semicircle& c1, const Semicircle& c2) {
  if (c1.is_line() && c2.is_line()) {
    // Every pair of vertical lines meets at infinity.
    return c1.p() == c2.p() ? CircleRelation::identical : CircleRelation::tangent;
  }
  return interval_relation(covered(c1), covered(c2));
}

bool disjoint(const Semicircle& c1, const Semicircle& c2) { return relation(c1, c2) == CircleRelation::disjoint; }
bool tangent(const Semicircle& c1, const Semicircle& c2) { return relation(c1, c2) == CircleRelation::tangent; }
bool nested(const Semicircle& c1, const Semicircle& c2) { return relation(c1, c2) == CircleRelation::nested; }

bool nested_inside(const Semicircle& inner, const Semicircle& outer) {
  if (inner.is_line()) return false;
  const Interval i = covered(inner);
  const Interval o = covered(outer);
  return o.lo < i.lo && i.hi < o.hi;
}

bool separates(const Semicircle& circle, const BoundaryPoint& x, const BoundaryPoint& y) {
  for (const BoundaryPoint* pt : {&x, &y}) {
    if (on_circle(circle, *pt))
      throw TangentialDegeneracyError("point " + pt->str() + " lies on " + circle.str());
  }
  return interior_contains(circle, x) != interior_contains(circle, y);
}

std::vector<AlgebraicPoint> axis_intersections(const Semicircle& circle, AxisRay ray) {
  std::vector<AlgebraicPoint> out;
  const AlgebraicPoint& p = circle.p().value();
  switch (ray) {
    case AxisRay::positive_real:
      if (p.sign() > 0) out.push_back(p);
      if (!circle.is_line() && circle.q().value().sign() > 0) out.push_back(circle.q().value());
      break;
    case AxisRay::negative_real:
      if (p.sign() < 0) out.push_back(-p);
      if (!circle.is_line() && circle.q().value().sign() < 0) out.push_back(-circle.q().value());
      break;
    case AxisRay::positive_imaginary:
      // r^2 - c^2 = -p q, positive exactly when p < 0 < q.
      if (!circle.is_line() && p.sign() < 0 && circle.q().value().sign() > 0) {
        const AlgebraicPoint height_sq = -(p * circle.q().value());
        out.push_back(AlgebraicPoint::sqrt(height_sq.as_rational()));
      }
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<AlgebraicPoint> designated_intersection(const Semicircle& circle, AxisRay ray) {
  auto values = axis_intersections(circle, ray);
  if (values.empty()) return std::nullopt;
  return values.back();
}

ConsecutiveGap consecutive_gap(const Semicircle& cj, const Semicircle& cj1) {
  ConsecutiveGap gap;
  bool have = false;
  for (AxisRay ray : {AxisRay::positive_real, AxisRay::positive_imaginary, AxisRay::negative_real}) {
    auto y1 = designated_intersection(cj, ray);
    auto y2 = designated_intersection(cj1, ray);
    if (!y1 || !y2) continue;
    Real d = abs(to_real(*y1) - to_real(*y2));
    if (!have || d > gap.z) {
      gap.z = d;
      gap.max_ray = ray;
      try {
        gap.z_exact = (*y1 - *y2).abs();
      } catch (const NestedRadicalError&) {
        gap.z_exact.reset();
      }
      have = true;
    }
    gap.rays.push_back({ray, *y1, *y2, std::move(d)});
  }
  if (!have) throw DomainError("circles " + cj.str() + " and " + cj1.str() + " meet no common axis ray");
  return gap;
}

std::optional<std::pair<std::size_t, std::size_t>> find_crossing_pair(std::span<const Semicircle> circles) {
  std::vector<std::size_t> finite;
  std::vector<std::size_t> lines;
  for (std::size_t i = 0; i < circles.size(); ++i) (circles[i].is_line() ? lines : finite).push_back(i);
  for (std::size_t li : lines) {
    for (std::size_t j = 0; j < circles.size(); ++j) {
      if (j != li && relation(circles[li], circles[j]) == CircleRelation::crossing) return std::pair{li, j};
    }
  }
  std::sort(finite.begin(), finite.end(), [&](std::size_t x, std::size_t y) {
    const auto& cx = circles[x];
    const auto& cy = circles[y];
    if (cx.p() != cy.p()) return cx.p() < cy.p();
    return cy.q() < cx.q();
  });
  std::vector<std::size_t> stack;
  for (std::size_t i : finite) {
    const Semicircle& c = circles[i];
    while (!stack.empty() && !(c.p() < circles[stack.back()].q())) stack.pop_back();
    if (!stack.empty() && circles[stack.back()].q() < c.q()) return std::pair{stack.back(), i};
    stack.push_back(i);
  }
  return std::nullopt;
}

std::vector<GapInterval> gaps_on_real_line(std::span<const Semicircle> circles, const AlgebraicPoint& window_lo,
                                           const AlgebraicPoint& window_hi) {
  if (!(window_lo < window_hi)) throw DomainError("empty window");
  if (auto bad = find_crossing_pair(circles)) {
    throw CrossingCirclesError("circles " + circles[bad->first].str() + " and " + circles[bad->second].str() +
                               " cross");
  }
  std::vector<Interval> cover;
  cover.reserve(circles.size());
  for (const auto& c : circles) cover.push_back(covered(c));
  std::sort(cover.begin(), cover.end(), [](const Interval& x, const Interval& y) { return x.lo < y.lo; });

  const Ext end = Ext::finite(window_hi);
  Ext cursor = Ext::finite(window_lo);
  std::vector<GapInterval> gaps;
  auto emit = [&](const Ext& lo, const Ext& hi) {
    if (lo < hi) gaps.push_back({lo.v, hi.v, hi.v - lo.v});
  };
  for (const Interval& iv : cover) {
    if (!(cursor < end)) break;
    if (cursor < iv.lo) emit(cursor, iv.lo < end ? iv.lo : end);
    if (cursor < iv.hi) cursor = iv.hi;
  }
  if (cursor < end) emit(cursor, end);
  return gaps;
}

}  // namespace schottky
