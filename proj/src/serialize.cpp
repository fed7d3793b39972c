#include "schottky/serialize.hpp"

#include "schottky/errors.hpp"

namespace schottky {

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const AlgebraicPoint& x) {
  Json j;
  j["base"] = to_string(x.base());
  j["coeff"] = to_string(x.coeff());
  j["radicand"] = to_string(x.radicand());
  return j;
}

Json to_json(const BoundaryPoint& x) {
  if (x.is_infinite()) return "inf";
  return to_json(x.value());
}

Json to_json(const Semicircle& c) {
  Json j;
  j["p"] = to_json(c.p());
  j["q"] = to_json(c.q());
  if (c.is_line()) j["interior"] = c.line_interior_right() ? "right" : "left";
  return j;
}

Json to_json(const MobiusMap& g) {
  return Json::array({Json::array({to_json(g.a()), to_json(g.b())}), Json::array({to_json(g.c()), to_json(g.d())})});
}

Json to_json(const GapInterval& gap) {
  Json j;
  j["lo"] = to_json(gap.lo);
  j["hi"] = to_json(gap.hi);
  j["length"] = gap.length.is_rational() ? to_string(gap.length.base()) : gap.length.str();
  j["length_float"] = gap.length.to_double();
  return j;
}

Json to_json(const OrbitEntry& entry) {
  Json j;
  j["word"] = entry.word.str();
  j["seed"] = circle_label(entry.seed);
  j["circle"] = to_json(entry.circle);
  j["depth"] = entry.depth();
  return j;
}

Json to_json(const ClassicalVerdict& verdict) {
  Json j;
  j["passed"] = verdict.passed();
  Json failures = Json::array();
  for (const auto& f : verdict.failures) {
    Json w;
    w["kind"] = to_string(f.kind);
    Json circles = Json::array();
    for (int c : f.circles) circles.push_back(circle_label(c));
    w["circles"] = circles;
    Json points = Json::array();
    for (const auto& p : f.points) points.push_back(to_json(p));
    w["points"] = points;
    w["detail"] = f.detail;
    failures.push_back(std::move(w));
  }
  j["failures"] = failures;
  return j;
}

Json real_to_json(const Real& x, unsigned digits) {
  Json j;
  j["decimal"] = to_decimal_string(x, digits);
  j["float"] = x.convert_to<double>();
  return j;
}

Json to_json(const BoundReport& report) {
  Json j;
  j["lemma"] = report.lemma;
  Json inputs;
  for (const auto& [k, v] : report.inputs) inputs[k] = v;
  j["inputs"] = inputs;
  j["precision_digits"] = report.digits;
  j["value"] = real_to_json(report.value, report.digits);
  if (report.threshold) {
    j["threshold"] = to_string(*report.threshold);
    j["comparison"] = report.comparison;
  } else {
    j["threshold"] = nullptr;
  }
  j["verdict"] = to_string(report.verdict);
  Json items = Json::array();
  for (const auto& it : report.intermediates) {
    Json e;
    e["name"] = it.name;
    if (!it.exact.empty()) e["exact"] = it.exact;
    e["value"] = real_to_json(it.value, report.digits);
    e["provenance"] = it.provenance;
    items.push_back(std::move(e));
  }
  j["intermediates"] = items;
  j["notes"] = report.notes;
  return j;
}

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw DomainError("rational must be a string");
  return parse_rational(j.get<std::string>());
}

AlgebraicPoint algebraic_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("base") || !j.contains("coeff") || !j.contains("radicand") || j.size() != 3)
    throw DomainError("algebraic point needs exactly base, coeff, radicand");
  return {rational_from_json(j["base"]), rational_from_json(j["coeff"]), rational_from_json(j["radicand"])};
}

BoundaryPoint boundary_from_json(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") return BoundaryPoint::infinity();
  return BoundaryPoint(algebraic_from_json(j));
}

Semicircle semicircle_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("p") || !j.contains("q")) throw DomainError("semicircle needs p and q");
  bool right = true;
  if (j.contains("interior")) right = j["interior"].get<std::string>() != "left";
  return {boundary_from_json(j["p"]), boundary_from_json(j["q"]), right};
}

std::string orbit_jsonl(const std::vector<OrbitEntry>& entries) {
  std::string out;
  for (const auto& e : entries) {
    out += to_json(e).dump();
    out += '\n';
  }
  return out;
}

}  // namespace schottky
