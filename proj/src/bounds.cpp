#include "schottky/bounds.hpp"

#include "schottky/errors.hpp"

namespace schottky {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::not_applicable: return "not_applicable";
  }
  return "not_applicable";
}

std::string to_string(EpsilonSource s) { return s == EpsilonSource::lemma22 ? "lemma22" : "lemma23"; }

namespace {

constexpr const char* kPaperConstant = "paper constant";
constexpr const char* kDerived = "derived";

std::vector<std::pair<std::string, std::string>> param_inputs(const PaperParams& p) {
  return {{"lambda", to_string(p.lambda)}, {"kappa", to_string(p.kappa)}};
}

Intermediate exact_item(std::string name, const Rational& value, const char* provenance) {
  return {std::move(name), to_string(value), to_real(value), provenance};
}

Intermediate algebraic_item(std::string name, const AlgebraicPoint& value, const char* provenance) {
  return {std::move(name), value.str(), to_real(value), provenance};
}

}  // namespace

BoundReport lemma22_bound(const PaperParams& p) {
  PrecisionScope scope(current_digits());
  const Rational& l = p.lambda;
  const Rational prefactor = Rational(2) / (4 * l * l + 9 * l + 3);
  const Rational radicand = 6 * l * l * l * l + 16 * l * l * l + 3 * l * l - 16 * l - 8;
  if (radicand.sign() < 0) throw NumericError("inner radicand 6l^4+16l^3+3l^2-16l-8 is negative: " + to_string(radicand));
  const Rational two_oh_one(201, 100);

  BoundReport r;
  r.lemma = "lemma22";
  r.digits = scope.digits();
  r.inputs = param_inputs(p);
  r.comparison = "<";
  const Real sqrt_201 = sqrt(to_real(two_oh_one));
  const Real sqrt_kappa = sqrt(to_real(p.kappa));
  const AlgebraicPoint sqrt_radicand = AlgebraicPoint::sqrt(radicand);
  r.value = to_real(prefactor) * sqrt_201 * sqrt_kappa * to_real(sqrt_radicand);
  r.intermediates.push_back(exact_item("prefactor 2/(4l^2+9l+3)", prefactor, kDerived));
  r.intermediates.push_back({"sqrt(2.01)", "sqrt(201/100)", sqrt_201, kPaperConstant});
  r.intermediates.push_back({"sqrt(kappa)", "sqrt(" + to_string(p.kappa) + ")", sqrt_kappa, kDerived});
  r.intermediates.push_back(exact_item("inner radicand 6l^4+16l^3+3l^2-16l-8", radicand, kDerived));
  r.intermediates.push_back(algebraic_item("sqrt(inner radicand)", sqrt_radicand, kDerived));
  r.notes.push_back("upper bound on the length of a real-line component of the domain of discontinuity "
                    "meeting [-(l+3), -(l+1)] u [l+1, l+3]; no threshold");
  return r;
}

BoundReport lemma23_bound(const PaperParams& p) {
  PrecisionScope scope(current_digits());
  const BoundReport base = lemma22_bound(p);
  BoundReport r;
  r.lemma = "lemma23";
  r.digits = scope.digits();
  r.inputs = param_inputs(p);
  r.comparison = "<";
  r.value = to_real(p.lambda + 2) * base.value;
  r.intermediates.push_back({"lemma22 bound", "", base.value, kDerived});
  r.intermediates.push_back(exact_item("factor l+2", p.lambda + 2, kDerived));
  r.intermediates.push_back(exact_item("vertical window top (l+2)(l+3)", (p.lambda + 2) * (p.lambda + 3), kDerived));
  r.notes.push_back("upper bound on components on the imaginary axis meeting i[0, (l+2)(l+3)]; no threshold");
  return r;
}

Real lemma24_factor(const PaperParams& p) {
  PrecisionScope scope(current_digits());
  const Real l = to_real(p.lambda);
  const Real tau = sqrt((l + 1) * (l + 3));
  const Real s = l + 2 + tau;
  const Real first = (2 * l + 5) / (2 * sqrt(Real(2)) * sqrt(l + 2)) + 1;
  const Real second = 16 * ((2 * l + 5) * (1 + s + s * s)) + 1;
  return first * second + 1;
}

BoundReport lemma24_bound(const PaperParams& p, const Real& epsilon) {
  PrecisionScope scope(current_digits());
  if (!(epsilon > 0)) throw DomainError("epsilon must be positive");
  const Real l = to_real(p.lambda);
  const Real tau = sqrt((l + 1) * (l + 3));
  const Real s = l + 2 + tau;
  const Real first = (2 * l + 5) / (2 * sqrt(Real(2)) * sqrt(l + 2)) + 1;
  const Real quad = 1 + s + s * s;
  const Real factor = lemma24_factor(p);

  BoundReport r;
  r.lemma = "lemma24";
  r.digits = scope.digits();
  r.inputs = param_inputs(p);
  r.inputs.emplace_back("epsilon", to_decimal_string(epsilon, scope.digits()));
  r.comparison = "<";
  r.value = factor * epsilon;
  r.intermediates.push_back(algebraic_item("tau", AlgebraicPoint::sqrt((p.lambda + 1) * (p.lambda + 3)), kDerived));
  r.intermediates.push_back({"s = l+2+tau", "", s, kDerived});
  r.intermediates.push_back({"1+s+s^2", "", quad, kDerived});
  r.intermediates.push_back({"(2l+5)/(2 sqrt2 sqrt(l+2)) + 1", "", first, kDerived});
  r.intermediates.push_back({"bracketed factor", "", factor, kDerived});
  r.notes.push_back("bound on Z when two of the three ray distances are below epsilon; no threshold");
  return r;
}

BoundReport lemma25_pipeline(const PaperParams& p, EpsilonSource source) {
  PrecisionScope scope(current_digits());
  const BoundReport eps = source == EpsilonSource::lemma22 ? lemma22_bound(p) : lemma23_bound(p);
  BoundReport inner = lemma24_bound(p, eps.value);

  BoundReport r;
  r.lemma = "lemma25";
  r.digits = scope.digits();
  r.inputs = param_inputs(p);
  r.inputs.emplace_back("epsilon_source", to_string(source));
  r.value = inner.value;
  r.threshold = Rational(1, 5);
  r.comparison = "<";
  r.verdict = r.value < to_real(*r.threshold) ? Verdict::holds : Verdict::fails;
  r.intermediates.push_back({"epsilon (" + to_string(source) + ")", "", eps.value, kDerived});
  r.intermediates.push_back({"lemma24 factor", "", inner.value / eps.value, kDerived});
  r.notes.push_back("Z bound = lemma24 factor x epsilon, compared with 1/5");
  if (source == EpsilonSource::lemma23) {
    r.notes.push_back("epsilon taken from the imaginary-axis bound; the verdict can differ from the real-line choice");
  } else {
    r.notes.push_back("epsilon taken from the real-line bound");
  }
  return r;
}

BoundReport theorem_diameter_check(const PaperParams& p) {
  PrecisionScope scope(current_digits());
  const DiameterPoints d = diameter_points(p);
  BoundReport r;
  r.lemma = "theorem_diameter";
  r.digits = scope.digits();
  r.inputs = param_inputs(p);
  r.value = to_real(d.difference);
  r.threshold = Rational(1, 5);
  r.comparison = ">";
  r.verdict = d.difference > AlgebraicPoint(Rational(1, 5)) ? Verdict::holds : Verdict::fails;
  r.intermediates.push_back(
      algebraic_item("tau", AlgebraicPoint::sqrt((p.lambda + 1) * (p.lambda + 3)), kDerived));
  r.intermediates.push_back(algebraic_item("h*(-(l+2)(l+3))", d.left_image, kDerived));
  r.intermediates.push_back(algebraic_item("h*(tau)", d.tau_image, kDerived));
  r.intermediates.push_back(algebraic_item("|difference|", d.difference, kDerived));
  r.notes.push_back("verdict decided exactly on the algebraic difference");
  return r;
}

}  // namespace schottky
