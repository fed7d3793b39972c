#include "schottky/config.hpp"

#include "schottky/errors.hpp"

#include <set>

namespace schottky {

std::string to_string(EpsilonChoice c) {
  switch (c) {
    case EpsilonChoice::lemma22: return "lemma22";
    case EpsilonChoice::lemma23: return "lemma23";
    case EpsilonChoice::both: return "both";
  }
  return "both";
}

namespace {

const std::set<std::string> kTopKeys = {"preset", "lambda",  "kappa", "depth", "epsilon_source", "lemma",
                                        "epsilon", "figure", "workers", "exaggerate_gaps", "out", "svg",
                                        "render"};
const std::set<std::string> kRenderKeys = {"width", "height", "xmin", "xmax", "ymax", "stroke_width",
                                           "circle_color", "region_color", "axis_color"};

// Exact numbers may be given as strings ("1e-12", "5/3") or JSON integers.
Rational exact_number(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) throw ConfigError(path, "expected an exact number as a string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const DomainError& e) {
    throw ConfigError(path, e.what());
  }
}

std::string string_value(const Json& j, const std::string& path) {
  if (!j.is_string()) throw ConfigError(path, "expected a string");
  return j.get<std::string>();
}

long long integer_value(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw ConfigError(path, "expected an integer");
  return j.get<long long>();
}

double float_value(const Json& j, const std::string& path) {
  if (!j.is_number()) throw ConfigError(path, "expected a number");
  return j.get<double>();
}

}  // namespace

void validate(RunConfig& cfg) {
  if (cfg.preset != Preset::custom) {
    if (cfg.lambda != preset_lambda(cfg.preset))
      throw ConfigError("lambda", "lambda is fixed by preset " + to_string(cfg.preset) + "; use preset custom");
    if (cfg.kappa.sign() < 0 || !(cfg.kappa < 1)) throw ConfigError("kappa", "kappa must lie in [0, 1)");
  } else {
    if (!(cfg.lambda > 1)) throw ConfigError("lambda", "lambda must exceed 1");
    if (cfg.kappa.sign() <= 0 || !(cfg.kappa < 1)) throw ConfigError("kappa", "custom kappa must lie in (0, 1)");
  }
  if (cfg.depth > 10) throw ConfigError("depth", "depth must lie in [0, 10]");
  if (cfg.workers < 1 || cfg.workers > 64) throw ConfigError("workers", "workers must lie in [1, 64]");
  if (!(cfg.exaggerate_gaps >= 1.0) || cfg.exaggerate_gaps > 1e15)
    throw ConfigError("exaggerate_gaps", "factor must lie in [1, 1e15]");
  if (cfg.figure && (*cfg.figure < 1 || *cfg.figure > 5)) throw ConfigError("figure", "figure must be 1..5");
  static const std::set<std::string> lemmas = {"2", "3", "4", "5", "all"};
  if (!lemmas.count(cfg.lemma)) throw ConfigError("lemma", "lemma must be 2, 3, 4, 5 or all");
  if (cfg.epsilon) {
    Rational eps;
    try {
      eps = parse_rational(*cfg.epsilon);
    } catch (const DomainError& e) {
      throw ConfigError("epsilon", e.what());
    }
    if (eps.sign() <= 0) throw ConfigError("epsilon", "epsilon must be positive");
  }
  if (cfg.render.width <= 0 || cfg.render.height <= 0) throw ConfigError("render", "image size must be positive");
}

RunConfig parse_config(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("$", std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("$", "configuration must be a JSON object");
  for (const auto& [key, _] : doc.items()) {
    if (!kTopKeys.count(key)) throw ConfigError(key, "unknown key");
  }

  RunConfig cfg;
  if (doc.contains("preset")) {
    try {
      cfg.preset = parse_preset(string_value(doc["preset"], "preset"));
    } catch (const DomainError& e) {
      throw ConfigError("preset", e.what());
    }
  }
  if (cfg.preset != Preset::custom) cfg.lambda = preset_lambda(cfg.preset);
  if (doc.contains("lambda")) cfg.lambda = exact_number(doc["lambda"], "lambda");
  else if (cfg.preset == Preset::custom) throw ConfigError("lambda", "custom preset requires lambda");
  if (doc.contains("kappa")) cfg.kappa = exact_number(doc["kappa"], "kappa");
  else if (cfg.preset == Preset::custom) throw ConfigError("kappa", "custom preset requires kappa");
  if (doc.contains("depth")) {
    const long long d = integer_value(doc["depth"], "depth");
    if (d < 0 || d > 10) throw ConfigError("depth", "depth must lie in [0, 10]");
    cfg.depth = static_cast<unsigned>(d);
  }
  if (doc.contains("epsilon_source")) {
    const std::string s = string_value(doc["epsilon_source"], "epsilon_source");
    if (s == "lemma22") cfg.epsilon_source = EpsilonChoice::lemma22;
    else if (s == "lemma23") cfg.epsilon_source = EpsilonChoice::lemma23;
    else if (s == "both") cfg.epsilon_source = EpsilonChoice::both;
    else throw ConfigError("epsilon_source", "expected lemma22, lemma23 or both");
  }
  if (doc.contains("lemma")) {
    const Json& l = doc["lemma"];
    cfg.lemma = l.is_number_integer() ? std::to_string(l.get<long long>()) : string_value(l, "lemma");
  }
  if (doc.contains("epsilon")) {
    const Json& e = doc["epsilon"];
    cfg.epsilon = string_value(e, "epsilon");
  }
  if (doc.contains("figure")) cfg.figure = static_cast<int>(integer_value(doc["figure"], "figure"));
  if (doc.contains("workers")) {
    const long long w = integer_value(doc["workers"], "workers");
    if (w < 1 || w > 64) throw ConfigError("workers", "workers must lie in [1, 64]");
    cfg.workers = static_cast<unsigned>(w);
  }
  if (doc.contains("exaggerate_gaps")) cfg.exaggerate_gaps = float_value(doc["exaggerate_gaps"], "exaggerate_gaps");
  if (doc.contains("out")) cfg.out = string_value(doc["out"], "out");
  if (doc.contains("svg")) cfg.svg = string_value(doc["svg"], "svg");
  if (doc.contains("render")) {
    const Json& r = doc["render"];
    if (!r.is_object()) throw ConfigError("render", "expected an object");
    for (const auto& [key, value] : r.items()) {
      const std::string path = "render." + key;
      if (!kRenderKeys.count(key)) throw ConfigError(path, "unknown key");
      if (key == "width") cfg.render.width = static_cast<int>(integer_value(value, path));
      else if (key == "height") cfg.render.height = static_cast<int>(integer_value(value, path));
      else if (key == "xmin") cfg.render.xmin = float_value(value, path);
      else if (key == "xmax") cfg.render.xmax = float_value(value, path);
      else if (key == "ymax") cfg.render.ymax = float_value(value, path);
      else if (key == "stroke_width") cfg.render.stroke_width = float_value(value, path);
      else if (key == "circle_color") cfg.render.circle_color = string_value(value, path);
      else if (key == "region_color") cfg.render.region_color = string_value(value, path);
      else if (key == "axis_color") cfg.render.axis_color = string_value(value, path);
    }
  }
  validate(cfg);
  return cfg;
}

Json RunConfig::to_json() const {
  Json j;
  j["preset"] = schottky::to_string(preset);
  j["lambda"] = schottky::to_string(lambda);
  j["kappa"] = schottky::to_string(kappa);
  j["depth"] = depth;
  j["epsilon_source"] = schottky::to_string(epsilon_source);
  j["lemma"] = lemma;
  j["epsilon"] = epsilon ? Json(*epsilon) : Json(nullptr);
  j["figure"] = figure ? Json(*figure) : Json(nullptr);
  j["exaggerate_gaps"] = exaggerate_gaps;
  j["precision_digits"] = current_digits();
  return j;
}

}  // namespace schottky
