#include "schottky/commands.hpp"

#include "schottky/errors.hpp"
#include "schottky/scene.hpp"
#include "schottky/svg.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace schottky {

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"construct", "check-classical", "orbit", "bounds",
                                                 "psi",       "diameter",        "render"};
  return names;
}

namespace {

Json map_json(const MobiusMap& g) {
  Json j;
  j["matrix"] = to_json(g);
  j["det"] = to_json(g.det());
  j["class"] = to_string(classify(g));
  if (classify(g) != MapClass::elliptic && classify(g) != MapClass::identity) {
    const auto [u, v] = fixed_points(g);
    j["fixed_points"] = Json::array({to_json(u), to_json(v)});
  }
  if (!g.c().is_zero()) j["isometric_circle"] = to_json(isometric_circle(g));
  return j;
}

Json circles_json(const SchottkySystem& sys) {
  Json out = Json::array();
  for (int i = 0; i < 4; ++i) {
    Json c;
    c["label"] = circle_label(i);
    c["circle"] = to_json(sys.circles[i]);
    c["center"] = to_json(sys.circles[i].center());
    c["radius"] = to_json(sys.circles[i].radius());
    out.push_back(std::move(c));
  }
  return out;
}

Json pairings_json(const SchottkySystem& sys) {
  Json out = Json::array();
  const char* names[] = {"A", "B"};
  for (int i = 0; i < 2; ++i) {
    const auto& pr = sys.pairings[i];
    Json j;
    j["generator"] = names[i];
    j["source"] = circle_label(pr.source);
    j["target"] = circle_label(pr.target);
    j["image_of_source"] = to_json(image_under_map(sys.circles[pr.source], pr.map));
    j["exact_match"] = image_under_map(sys.circles[pr.source], pr.map) == sys.circles[pr.target];
    out.push_back(std::move(j));
  }
  return out;
}

Json construct(const RunConfig& cfg) {
  const PaperParams p = cfg.params();
  const DerivedConstants dc = derived_constants(p);
  const GeneratorPair gens = build_generators(p);
  const SchottkySystem sys = build_circles(p);
  const unsigned digits = current_digits();

  Json r;
  Json constants;
  constants["tau"] = to_json(dc.tau);
  constants["e"] = to_json(dc.e);
  constants["A"] = to_json(dc.a_const);
  constants["h_star_fixed_points"] = Json::array({to_json(dc.h1_fixed.first), to_json(dc.h1_fixed.second)});
  constants["h_double_star_fixed_points"] = Json::array({to_json(dc.h2_fixed.first), to_json(dc.h2_fixed.second)});
  constants["h_double_star_fixed_points_equal_tau"] = dc.h2_fixed.second == BoundaryPoint(dc.tau);
  r["constants"] = std::move(constants);
  r["generators"] = {{"h_star", map_json(gens.h1)}, {"h_double_star", map_json(gens.h2)}};
  r["circles"] = circles_json(sys);
  r["pairings"] = pairings_json(sys);

  const MobiusMap d = commutator_map(p);
  Json comm = map_json(d);
  try {
    const ClosedFormFixedPoints cf = commutator_fixed_points_closed_form(p);
    Json closed;
    closed["denominator"] = to_json(cf.denominator);
    closed["numerator_lead"] = to_json(cf.numerator_lead);
    closed["discriminant_as_printed"] = to_json(cf.discriminant);
    closed["discriminant_exact"] = to_json(cf.exact_discriminant);
    closed["z_plus"] = real_to_json(to_real(cf.z_plus), digits);
    closed["z_minus"] = real_to_json(to_real(cf.z_minus), digits);
    if (classify(d) == MapClass::hyperbolic) {
      const auto [u, v] = fixed_points(d);
      const Real err = std::max(abs(to_real(cf.z_minus) - to_real(u.value())),
                                abs(to_real(cf.z_plus) - to_real(v.value())));
      closed["max_abs_difference_to_matrix"] = real_to_json(err, digits);
    }
    closed["evaluated_at"] = "x = lambda";
    comm["closed_form"] = std::move(closed);
  } catch (const NumericError& e) {
    comm["closed_form"] = {{"error", e.what()}};
  }
  r["commutator"] = std::move(comm);

  Json quartic = Json::array();
  for (const Rational& x : quartic_roots()) quartic.push_back({{"root", to_json(x)}, {"residual", to_json(quartic_residual(x))}});
  r["quartic_roots"] = std::move(quartic);
  return r;
}

Json check_classical(const RunConfig& cfg) {
  const SchottkySystem sys = build_circles(cfg.params());
  const ClassicalVerdict v = classical_check(sys);
  Json r;
  r["circles"] = circles_json(sys);
  r["classical"] = to_json(v);
  r["verdict"] = v.passed() ? "holds" : "fails";
  if (v.passed()) {
    r["note"] = "the four circles satisfy the ping-pong conditions, so this generating set is classical for this "
                "kappa; non-classicality of the group, if it holds, is not visible to this check";
  }
  return r;
}

Json orbit(const RunConfig& cfg) {
  const PaperParams p = cfg.params();
  const SchottkySystem sys = build_circles(p);
  const auto entries = orbit_circles(sys, cfg.depth, cfg.workers);
  Json r;
  r["depth"] = cfg.depth;
  r["count"] = entries.size();
  std::vector<std::size_t> per_depth(cfg.depth + 1, 0);
  for (const auto& e : entries) ++per_depth[e.depth()];
  r["count_by_depth"] = per_depth;

  std::vector<Semicircle> circles;
  circles.reserve(entries.size());
  for (const auto& e : entries) circles.push_back(e.circle);
  const auto crossing = find_crossing_pair(circles);
  r["laminar"] = !crossing.has_value();
  if (crossing) {
    r["crossing_pair"] = Json::array({to_json(entries[crossing->first]), to_json(entries[crossing->second])});
  }

  const NestedFamily fam = nested_family(sys, cfg.depth, derived_constants(p).tau, p.lambda);
  Json nf;
  nf["candidates_examined"] = fam.candidates_examined;
  nf["chain_verified"] = fam.chain_verified;
  Json chain = Json::array();
  for (const auto& m : fam.chain) {
    Json j = to_json(m.entry);
    j["meets"] = to_string(m.meets);
    j["contains_minus_tau"] = m.contains_minus_tau;
    chain.push_back(std::move(j));
  }
  nf["chain"] = std::move(chain);
  nf["findings"] = fam.findings;
  r["nested_family"] = std::move(nf);

  Json list = Json::array();
  for (const auto& e : entries) list.push_back(to_json(e));
  r["entries"] = std::move(list);
  return r;
}

void add_lemma25(Json& r, const PaperParams& p, EpsilonChoice choice) {
  std::vector<EpsilonSource> sources;
  if (choice != EpsilonChoice::lemma23) sources.push_back(EpsilonSource::lemma22);
  if (choice != EpsilonChoice::lemma22) sources.push_back(EpsilonSource::lemma23);
  Json reports = Json::array();
  std::vector<Verdict> verdicts;
  for (EpsilonSource s : sources) {
    const BoundReport b = lemma25_pipeline(p, s);
    verdicts.push_back(b.verdict);
    Json j = to_json(b);
    j["epsilon_source"] = to_string(s);
    reports.push_back(std::move(j));
  }
  r["lemma25"] = std::move(reports);
  if (verdicts.size() == 2) r["lemma25_discrepancy"] = verdicts[0] != verdicts[1];
}

Json bounds(const RunConfig& cfg) {
  const PaperParams p = cfg.params();
  const bool all = cfg.lemma == "all";
  Json r;
  if (all || cfg.lemma == "2") r["lemma22"] = to_json(lemma22_bound(p));
  if (all || cfg.lemma == "3") r["lemma23"] = to_json(lemma23_bound(p));
  if (all || cfg.lemma == "4") {
    if (cfg.epsilon) {
      r["lemma24"] = to_json(lemma24_bound(p, to_real(parse_rational(*cfg.epsilon))));
    } else {
      Json j;
      j["factor"] = real_to_json(lemma24_factor(p), current_digits());
      j["note"] = "no epsilon given; the factor multiplies epsilon";
      r["lemma24"] = std::move(j);
    }
  }
  if (all || cfg.lemma == "5") add_lemma25(r, p, cfg.epsilon_source);
  return r;
}

Json psi(const RunConfig& cfg) {
  const PaperParams p = cfg.params();
  const PsiComponents pc = psi_components(p, cfg.depth, cfg.workers);
  const BoundReport bound = lemma22_bound(p);
  const unsigned digits = current_digits();
  Json r;
  Json lits = Json::array();
  for (int i = 0; i < 4; ++i) {
    const auto& iv = pc.psi[i];
    lits.push_back({{"name", "psi" + std::to_string(i + 1)},
                    {"lo", to_json(iv.lo)},
                    {"hi", to_json(iv.hi)},
                    {"length", real_to_json(to_real(iv.length()), digits)}});
  }
  r["literal_intervals"] = std::move(lits);
  r["depth"] = pc.depth;
  Json gaps = Json::array();
  for (const auto& g : pc.orbit_gaps) gaps.push_back(to_json(g));
  r["orbit_gaps"] = std::move(gaps);
  auto compare = [&](const std::optional<GapInterval>& g) -> Json {
    if (!g) return nullptr;
    Json j = to_json(*g);
    j["ratio_to_lemma22_bound"] = real_to_json(to_real(g->length) / bound.value, digits);
    return j;
  };
  r["largest_gap"] = compare(pc.largest_gap);
  r["gap_at_lambda_plus_one"] = compare(pc.gap_at_lambda_plus_one);
  if (pc.gap_at_lambda_plus_one) {
    r["gap_at_lambda_plus_one_at_least_2kappa"] = pc.gap_at_lambda_plus_one->length >= AlgebraicPoint(2 * p.kappa);
  }
  r["lemma22_bound"] = real_to_json(bound.value, digits);
  r["note"] = "measurement only; the orbit gaps are reported against the bound without asserting it";
  return r;
}

Json diameter(const RunConfig& cfg) {
  const PaperParams p = cfg.params();
  const DiameterPoints d = diameter_points(p);
  Json r;
  r["left_image"] = to_json(d.left_image);
  r["tau_image"] = to_json(d.tau_image);
  r["difference"] = to_json(d.difference);
  r["check"] = to_json(theorem_diameter_check(p));
  return r;
}

Json render(const RunConfig& cfg, std::string& svg) {
  const Scene s = cfg.figure ? figure_preset(*cfg.figure, cfg) : orbit_scene(cfg);
  svg = render_scene(s);
  Json r;
  r["scene"] = cfg.figure ? "figure-" + std::to_string(*cfg.figure) : std::string("orbit");
  r["title"] = s.title;
  r["arcs"] = s.count_arcs();
  r["regions"] = s.count_regions();
  r["items"] = s.items.size();
  r["exaggerate_gaps"] = cfg.exaggerate_gaps;
  return r;
}

}  // namespace

CommandResult run_command(const std::string& command, const RunConfig& cfg) {
  CommandResult out;
  try {
    PrecisionScope scope;
    Json result;
    if (command == "construct") result = construct(cfg);
    else if (command == "check-classical") result = check_classical(cfg);
    else if (command == "orbit") result = orbit(cfg);
    else if (command == "bounds") result = bounds(cfg);
    else if (command == "psi") result = psi(cfg);
    else if (command == "diameter") result = diameter(cfg);
    else if (command == "render") result = render(cfg, out.svg);
    else throw ConfigError("command", "unknown command '" + command + "'");

    Json report;
    report["schema"] = "1";
    report["tool"] = kToolName;
    report["version"] = kToolVersion;
    report["command"] = command;
    report["config"] = cfg.to_json();
    report["result"] = std::move(result);
    out.report = report.dump(2) + "\n";
  } catch (const ConfigError& e) {
    out = {};
    out.exit_code = kExitUsage;
    out.error = e.what();
  } catch (const std::exception& e) {
    out = {};
    out.exit_code = kExitNumeric;
    out.error = e.what();
  }
  return out;
}

}  // namespace schottky
