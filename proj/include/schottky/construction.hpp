#pragma once

#include "schottky/geometry.hpp"
#include "schottky/real.hpp"
#include "schottky/schottky_system.hpp"

#include <array>
#include <string>
#include <vector>

namespace schottky {

// lambda > 1 and 0 <= kappa < 1. kappa == 0 is accepted for limit checks;
// the system is tangent there and classical_check reports it.
struct PaperParams {
  Rational lambda;
  Rational kappa;

  PaperParams(Rational lambda_value, Rational kappa_value);
};

enum class Preset { lambda2, lambda5over3, lambda5over3_decimal, custom };

std::string to_string(Preset p);
Preset parse_preset(const std::string& name);  // throws DomainError
// Lambda of a named preset (not custom).
Rational preset_lambda(Preset p);

struct DerivedConstants {
  AlgebraicPoint tau;             // sqrt((l+1)(l+3))
  AlgebraicPoint e;               // sqrt(l^2 - (1-k)^2)
  Rational a_const;               // (l+2)^2 - (1-k)^2
  std::pair<BoundaryPoint, BoundaryPoint> h1_fixed;  // +-e
  std::pair<BoundaryPoint, BoundaryPoint> h2_fixed;  // +-sqrt(A)
};

DerivedConstants derived_constants(const PaperParams& p);

struct GeneratorPair {
  MobiusMap h1;  // h*  = [[l, l^2-(1-k)^2], [1, l]]
  MobiusMap h2;  // h** = [[l+2, (l+2)^2-(1-k)^2], [1, l+2]]
};

GeneratorPair build_generators(const PaperParams& p);

// SC1..SC4 paired by h*: SC3 -> SC2 and h**: SC4 -> SC1. Throws DomainError
// if the exact pairing fails.
SchottkySystem build_circles(const PaperParams& p);

// Roots of 9x^4 + 48x^3 + 91x^2 + 72x + 20 by rational-root search, ascending.
std::vector<Rational> quartic_roots();
Rational quartic_residual(const Rational& x);

// D = h* h** h* (h**)^{-1}.
MobiusMap commutator_map(const PaperParams& p);

struct ClosedFormFixedPoints {
  Rational denominator;        // 4x^2 + 9x + 4 - 2xk + xk^2
  Rational numerator_lead;     // 2{2x^3 + 6x^2 + 5x + 1 + 2(x+1)k - (x+1)k^2}
  Rational discriminant;       // bracketed polynomial as printed
  Rational exact_discriminant; // value making the formula equal D's fixed points
  AlgebraicPoint z_plus;
  AlgebraicPoint z_minus;
};

// Evaluates the printed closed form at x = lambda. Throws NumericError if the
// bracketed discriminant is negative.
ClosedFormFixedPoints commutator_fixed_points_closed_form(const PaperParams& p);

struct PsiInterval {
  AlgebraicPoint lo;
  AlgebraicPoint hi;
  AlgebraicPoint length() const { return hi - lo; }
};

struct PsiComponents {
  std::array<PsiInterval, 4> psi;      // psi1..psi4
  unsigned depth = 0;
  std::vector<GapInterval> orbit_gaps; // bounded gaps meeting [l+1, l+3] u [-(l+3), -(l+1)]
  std::optional<GapInterval> largest_gap;
  std::optional<GapInterval> gap_at_lambda_plus_one;  // the gap containing l+1
};

PsiComponents psi_components(const PaperParams& p, unsigned depth, unsigned workers = 1);

// h*(-(l+2)(l+3)) and h*(tau), exactly.
struct DiameterPoints {
  AlgebraicPoint left_image;
  AlgebraicPoint tau_image;
  AlgebraicPoint difference;  // |left - tau image|
};

DiameterPoints diameter_points(const PaperParams& p);

struct ModulusMargin {
  Rational quotient;
  Rational margin;  // (l+2) - quotient
  bool holds = false;
};

// ((l+2)t + A) / (t + l+2) < l+2 for t >= 0; throws DomainError for t < 0.
ModulusMargin modulus_quotient_check(const PaperParams& p, const Rational& t);

}  // namespace schottky
