#pragma once

#include "schottky/bounds.hpp"
#include "schottky/construction.hpp"
#include "schottky/serialize.hpp"

#include <optional>
#include <string>

namespace schottky {

struct RenderOptions {
  int width = 960;
  int height = 360;
  // Viewport in model coordinates; unset bounds are chosen per scene.
  std::optional<double> xmin, xmax, ymax;
  double stroke_width = 1.5;
  std::string circle_color = "#c0392b";
  std::string region_color = "#9be7e0";
  std::string axis_color = "#333333";
};

enum class EpsilonChoice { lemma22, lemma23, both };
std::string to_string(EpsilonChoice c);

struct RunConfig {
  Preset preset = Preset::lambda2;
  Rational lambda{2};
  Rational kappa{1, 1000000000000LL};
  unsigned depth = 6;
  EpsilonChoice epsilon_source = EpsilonChoice::both;
  std::string lemma = "all";              // 2, 3, 4, 5 or all
  std::optional<std::string> epsilon;     // ray-gap bound input, exact decimal
  std::optional<int> figure;              // 1..5 for render
  unsigned workers = 1;
  double exaggerate_gaps = 1.0;
  std::string out;                        // empty: stdout
  std::string svg;                        // empty: no SVG unless rendering
  RenderOptions render;

  PaperParams params() const { return {lambda, kappa}; }
  Json to_json() const;
};

// Validates everything; throws ConfigError naming the offending key for
// malformed JSON, unknown keys, wrong types, and out-of-range values.
RunConfig parse_config(const std::string& text);

// Re-checks cross-field invariants (preset vs lambda, ranges). Throws ConfigError.
void validate(RunConfig& cfg);

}  // namespace schottky
