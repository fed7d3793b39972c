#pragma once

#include "schottky/construction.hpp"
#include "schottky/real.hpp"

#include <optional>
#include <string>
#include <vector>

namespace schottky {

enum class Verdict { holds, fails, not_applicable };
std::string to_string(Verdict v);

enum class EpsilonSource { lemma22, lemma23 };
std::string to_string(EpsilonSource s);

struct Intermediate {
  std::string name;
  std::string exact;  // exact form when one exists, else empty
  Real value;
  std::string provenance;  // "paper constant" | "derived"
};

struct BoundReport {
  std::string lemma;
  std::vector<std::pair<std::string, std::string>> inputs;  // name -> exact string
  Real value;
  std::optional<Rational> threshold;
  std::string comparison;  // "<" when the bound must stay below, ">" above
  Verdict verdict = Verdict::not_applicable;
  std::vector<Intermediate> intermediates;
  std::vector<std::string> notes;
  unsigned digits = kDefaultDigits;
};

// Component length bound on the real line (uses the precision of the caller's
// PrecisionScope). Throws NumericError for a negative inner radicand.
BoundReport lemma22_bound(const PaperParams& p);

// (lambda + 2) times the lemma22 bound, with the vertical window recorded.
BoundReport lemma23_bound(const PaperParams& p);

// The bracketed factor times epsilon. Throws DomainError for epsilon <= 0.
BoundReport lemma24_bound(const PaperParams& p, const Real& epsilon);
Real lemma24_factor(const PaperParams& p);

// lemma24 with epsilon from the selected bound, compared with 1/5.
BoundReport lemma25_pipeline(const PaperParams& p, EpsilonSource source);

// |h*(-(l+2)(l+3)) - h*(tau)| compared with 1/5.
BoundReport theorem_diameter_check(const PaperParams& p);

}  // namespace schottky
