#pragma once

#include "schottky/algebraic.hpp"

#include <compare>
#include <string>

namespace schottky {

// A point of R u {inf}. The point at infinity sorts after every finite point.
class BoundaryPoint {
public:
  BoundaryPoint() = default;
  BoundaryPoint(AlgebraicPoint value) : value_(std::move(value)) {}  // NOLINT
  BoundaryPoint(Rational value) : value_(std::move(value)) {}         // NOLINT
  BoundaryPoint(long value) : value_(Rational(value)) {}              // NOLINT

  static BoundaryPoint infinity() {
    BoundaryPoint p;
    p.infinite_ = true;
    return p;
  }

  bool is_infinite() const noexcept { return infinite_; }
  bool is_finite() const noexcept { return !infinite_; }
  // Throws DomainError at infinity.
  const AlgebraicPoint& value() const;

  double to_double() const;
  std::string str() const { return infinite_ ? "inf" : value_.str(); }

  friend bool operator==(const BoundaryPoint& x, const BoundaryPoint& y) {
    if (x.infinite_ || y.infinite_) return x.infinite_ == y.infinite_;
    return x.value_ == y.value_;
  }
  friend std::strong_ordering operator<=>(const BoundaryPoint& x, const BoundaryPoint& y) {
    if (x.infinite_ || y.infinite_) return static_cast<int>(x.infinite_) <=> static_cast<int>(y.infinite_);
    return x.value_ <=> y.value_;
  }

private:
  AlgebraicPoint value_;
  bool infinite_ = false;
};

}  // namespace schottky
