#include "schottky/construction.hpp"

#include "schottky/errors.hpp"

#include <algorithm>

namespace schottky {

PaperParams::PaperParams(Rational lambda_value, Rational kappa_value)
    : lambda(std::move(lambda_value)), kappa(std::move(kappa_value)) {
  if (!(lambda > 1)) throw DomainError("lambda must exceed 1, got " + to_string(lambda));
  if (kappa.sign() < 0 || !(kappa < 1)) throw DomainError("kappa must lie in [0, 1), got " + to_string(kappa));
}

std::string to_string(Preset p) {
  switch (p) {
    case Preset::lambda2: return "lambda2";
    case Preset::lambda5over3: return "lambda5over3";
    case Preset::lambda5over3_decimal: return "lambda5over3-decimal";
    case Preset::custom: return "custom";
  }
  return "custom";
}

Preset parse_preset(const std::string& name) {
  for (Preset p : {Preset::lambda2, Preset::lambda5over3, Preset::lambda5over3_decimal, Preset::custom}) {
    if (to_string(p) == name) return p;
  }
  throw DomainError("unknown preset '" + name + "'");
}

Rational preset_lambda(Preset p) {
  switch (p) {
    case Preset::lambda2: return Rational(2);
    case Preset::lambda5over3: return Rational(5, 3);
    case Preset::lambda5over3_decimal: return parse_rational("1.6666666667");
    case Preset::custom: break;
  }
  throw DomainError("custom preset has no built-in lambda");
}

GeneratorPair build_generators(const PaperParams& p) {
  const Rational s = (1 - p.kappa) * (1 - p.kappa);
  const Rational l = p.lambda;
  const Rational m = p.lambda + 2;
  return {MobiusMap(l, l * l - s, 1, l), MobiusMap(m, m * m - s, 1, m)};
}

DerivedConstants derived_constants(const PaperParams& p) {
  const Rational s = (1 - p.kappa) * (1 - p.kappa);
  const auto gens = build_generators(p);
  DerivedConstants dc;
  dc.tau = AlgebraicPoint::sqrt((p.lambda + 1) * (p.lambda + 3));
  dc.e = AlgebraicPoint::sqrt(p.lambda * p.lambda - s);
  dc.a_const = (p.lambda + 2) * (p.lambda + 2) - s;
  dc.h1_fixed = fixed_points(gens.h1);
  dc.h2_fixed = fixed_points(gens.h2);
  return dc;
}

SchottkySystem build_circles(const PaperParams& p) {
  const Rational r = 1 - p.kappa;
  const auto gens = build_generators(p);
  SchottkySystem sys;
  sys.circles = {from_center_radius(p.lambda + 2, r), from_center_radius(p.lambda, r), from_center_radius(-p.lambda, r),
                 from_center_radius(-p.lambda - 2, r)};
  sys.pairings = {GeneratorPairing{gens.h1, 2, 1}, GeneratorPairing{gens.h2, 3, 0}};
  sys.validate_pairings();
  return sys;
}

Rational quartic_residual(const Rational& x) {
  return (((9 * x + 48) * x + 91) * x + 72) * x + 20;
}

std::vector<Rational> quartic_roots() {
  // Rational root theorem: p | 20, q | 9.
  const int numerators[] = {1, 2, 4, 5, 10, 20};
  const int denominators[] = {1, 3, 9};
  std::vector<Rational> roots;
  for (int num : numerators) {
    for (int den : denominators) {
      for (int sgn : {-1, 1}) {
        const Rational x(sgn * num, den);
        if (quartic_residual(x).is_zero() && std::find(roots.begin(), roots.end(), x) == roots.end()) roots.push_back(x);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

MobiusMap commutator_map(const PaperParams& p) {
  const auto g = build_generators(p);
  return compose(g.h1, compose(g.h2, compose(g.h1, inverse(g.h2))));
}

ClosedFormFixedPoints commutator_fixed_points_closed_form(const PaperParams& p) {
  const Rational& x = p.lambda;
  const Rational& k = p.kappa;
  const Rational x2 = x * x, x3 = x2 * x, x4 = x3 * x;
  const Rational k2 = k * k, k3 = k2 * k, k4 = k3 * k, k5 = k4 * k, k6 = k5 * k;

  ClosedFormFixedPoints cf;
  cf.denominator = 4 * x2 + 9 * x + 4 - 2 * x * k + x * k2;
  cf.numerator_lead = 2 * (2 * x3 + 6 * x2 + 5 * x + 1 + 2 * (x + 1) * k - (x + 1) * k2);
  cf.discriminant = (9 * x4 + 48 * x3 + 91 * x2 + 72 * x + 20) + 2 * k * (6 * x4 + 16 * x3 + 3 * x2 - 16 * x - 8) +
                    k2 * (-2 * x4 - 16 * x3 + x2 + 48 * x + 24) + 4 * k3 * (-x4 + x2 - 8 * x - 4) +
                    k4 * (x4 - 11 * x2 + 8 * x + 4) + 6 * k5 * x2 - 2 * k6 * x2;

  // Same shape read off D's matrix: fixed points ((a-d) +- sqrt(disc)) / (2c).
  const MobiusMap d = commutator_map(p);
  const Rational disc = (d.a() - d.d()) * (d.a() - d.d()) + 4 * d.b() * d.c();
  cf.exact_discriminant = disc * cf.denominator * cf.denominator / (4 * d.c() * d.c());

  if (cf.discriminant.sign() < 0) {
    throw NumericError("closed-form discriminant is negative: " + to_string(cf.discriminant));
  }
  const AlgebraicPoint root = AlgebraicPoint::sqrt(cf.discriminant);
  cf.z_plus = (AlgebraicPoint(cf.numerator_lead) + root) / AlgebraicPoint(cf.denominator);
  cf.z_minus = (AlgebraicPoint(cf.numerator_lead) - root) / AlgebraicPoint(cf.denominator);
  return cf;
}

namespace {

PsiInterval map_interval(const MobiusMap& g, const PsiInterval& iv) {
  AlgebraicPoint x = apply_boundary(g, BoundaryPoint(iv.lo)).value();
  AlgebraicPoint y = apply_boundary(g, BoundaryPoint(iv.hi)).value();
  if (y < x) std::swap(x, y);
  return {x, y};
}

bool meets(const GapInterval& gap, const Rational& lo, const Rational& hi) {
  return gap.lo < AlgebraicPoint(hi) && AlgebraicPoint(lo) < gap.hi;
}

}  // namespace

PsiComponents psi_components(const PaperParams& p, unsigned depth, unsigned workers) {
  const auto gens = build_generators(p);
  const auto fp = fixed_points(commutator_map(p));
  PsiComponents out;
  out.depth = depth;
  out.psi[0] = {fp.first.value(), fp.second.value()};
  out.psi[1] = map_interval(inverse(gens.h1), out.psi[0]);
  out.psi[2] = map_interval(inverse(gens.h2), out.psi[1]);
  out.psi[3] = map_interval(inverse(gens.h2), out.psi[0]);

  const SchottkySystem sys = build_circles(p);
  const ClassicalVerdict verdict = classical_check(sys);
  if (!verdict.passed()) throw DomainError("orbit gaps need a classical configuration: " + verdict.failures.front().detail);

  std::vector<Semicircle> circles;
  for (const auto& e : orbit_circles(sys, depth, workers)) circles.push_back(e.circle);
  const Rational outer = p.lambda + 4;
  const Rational l1 = p.lambda + 1, l3 = p.lambda + 3;
  for (auto& gap : gaps_on_real_line(circles, AlgebraicPoint(Rational(-outer)), AlgebraicPoint(outer))) {
    if (!meets(gap, l1, l3) && !meets(gap, -l3, -l1)) continue;
    // A gap reaching the window edge is the component through infinity.
    if (gap.lo == AlgebraicPoint(Rational(-outer)) || gap.hi == AlgebraicPoint(outer)) continue;
    if (gap.lo < AlgebraicPoint(l1) && AlgebraicPoint(l1) < gap.hi) out.gap_at_lambda_plus_one = gap;
    if (!out.largest_gap || out.largest_gap->length < gap.length) out.largest_gap = gap;
    out.orbit_gaps.push_back(std::move(gap));
  }
  return out;
}

DiameterPoints diameter_points(const PaperParams& p) {
  const auto gens = build_generators(p);
  const DerivedConstants dc = derived_constants(p);
  DiameterPoints d;
  d.left_image = apply_boundary(gens.h1, BoundaryPoint(Rational(-(p.lambda + 2) * (p.lambda + 3)))).value();
  d.tau_image = apply_boundary(gens.h1, BoundaryPoint(dc.tau)).value();
  d.difference = (d.left_image - d.tau_image).abs();
  return d;
}

ModulusMargin modulus_quotient_check(const PaperParams& p, const Rational& t) {
  if (t.sign() < 0) throw DomainError("modulus t must be nonnegative");
  const Rational m = p.lambda + 2;
  const Rational a = m * m - (1 - p.kappa) * (1 - p.kappa);
  ModulusMargin out;
  out.quotient = (m * t + a) / (t + m);
  out.margin = m - out.quotient;
  out.holds = out.margin.sign() > 0;
  return out;
}

}  // namespace schottky
