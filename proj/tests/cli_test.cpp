#include "schottky/commands.hpp"
#include "schottky/errors.hpp"
#include "schottky/scene.hpp"
#include "schottky/svg.hpp"
#include "support.hpp"

#include <doctest.h>

#include <regex>

using namespace schottky;
using testing_support::Q;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

std::string config_error_path(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e.path();
  }
  return "";
}

}  // namespace

TEST_CASE("parse_config") {
  const RunConfig cfg = parse_config(R"({"preset":"lambda2","kappa":"1e-12","depth":4})");
  CHECK(cfg.lambda == 2);
  CHECK(cfg.kappa == Q("1e-12"));
  CHECK(cfg.depth == 4);

  const RunConfig wide = parse_config(R"({"preset":"lambda2","kappa":"0.3","depth":4})");
  const SchottkySystem sys = build_circles(wide.params());
  CHECK(classical_check(sys).passed());
  const auto gaps = gaps_on_real_line(std::vector<Semicircle>(sys.circles.begin(), sys.circles.end()), -6, 6);
  CHECK(gaps[3].length == AlgebraicPoint(Q("0.6")));

  CHECK(config_error_path(R"({"preset":"custom","lambda":"1/2","kappa":"1e-12"})") == "lambda");
  CHECK(config_error_path(R"({"preset":"custom","lambda":"3","kappa":"0"})") == "kappa");
  CHECK(config_error_path(R"({"preset":"lambda2","depth":11})") == "depth");
  CHECK(config_error_path(R"({"preset":"lambda2","colour":"red"})") == "colour");
  CHECK(config_error_path(R"({"render":{"widht":3}})") == "render.widht");
  CHECK(config_error_path(R"({"depth":"four"})") == "depth");
  CHECK(config_error_path(R"({"preset":"lambda2",)") == "$");
  CHECK(config_error_path(R"({"preset":"lambda5over3","lambda":"2"})") == "lambda");
  CHECK(config_error_path(R"({"kappa":"0.1.2"})") == "kappa");
}

TEST_CASE("json round trip") {
  const AlgebraicPoint x = testing_support::surd("51/19", "-1/19", "264");
  CHECK(algebraic_from_json(to_json(x)) == x);
  CHECK(rational_from_json(to_json(Q("-7/3"))) == Q("-7/3"));
  CHECK(boundary_from_json(to_json(BoundaryPoint::infinity())).is_infinite());
  const SchottkySystem sys = build_circles(testing_support::params("5/3", "9e-12"));
  for (const auto& c : sys.circles) CHECK(semicircle_from_json(to_json(c)) == c);
  const Semicircle line(BoundaryPoint(Q("3/2")), BoundaryPoint::infinity(), false);
  CHECK(semicircle_from_json(to_json(line)) == line);
  CHECK_THROWS_AS(rational_from_json(Json(1.5)), DomainError);
}

TEST_CASE("orbit scene at depth 0") {
  RunConfig cfg;
  cfg.depth = 0;
  const Scene s = orbit_scene(cfg);
  CHECK(s.count_arcs() == 4);
  CHECK(s.count_regions() == 1);
  const std::string svg = render_scene(s);
  CHECK(count(svg, "class=\"arc") == 4);
  CHECK(count(svg, "id=\"real-axis\"") == 1);
  CHECK(count(svg, "class=\"region") == 1);
  CHECK(svg.find("id=\"tau-plus\"") != std::string::npos);
}

TEST_CASE("orbit scene arc count matches the orbit") {
  RunConfig cfg;
  cfg.depth = 2;
  const Scene s = orbit_scene(cfg);
  CHECK(s.count_arcs() == orbit_circles(build_circles(cfg.params()), 2).size());
  const std::string svg = render_scene(s);
  CHECK(svg.find("depth-2") != std::string::npos);
}

TEST_CASE("render_scene") {
  Scene empty;
  const std::string svg = render_scene(empty);
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(count(svg, "id=\"real-axis\"") == 1);
  CHECK(count(svg, "<path") == 0);
  CHECK(svg.find("href") == std::string::npos);

  Scene flat;
  flat.viewport.xmax = flat.viewport.xmin;
  CHECK_THROWS_AS(render_scene(flat), DomainError);
}

TEST_CASE("figure presets") {
  RunConfig cfg;
  const Scene two = figure_preset(2, cfg);
  CHECK(two.count_arcs() == 4);
  std::vector<double> centers;
  std::size_t chords = 0;
  for (const auto& item : two.items) {
    if (const auto* a = std::get_if<ArcItem>(&item)) centers.push_back(0.5 * (a->lo + a->hi));
    if (const auto* s = std::get_if<SegmentItem>(&item)) chords += s->css == "halfmoon";
  }
  std::sort(centers.begin(), centers.end());
  CHECK(centers == std::vector<double>{-4, -2, 2, 4});
  CHECK(chords == 4);

  const std::string three = render_scene(figure_preset(3, cfg));
  for (int i = 1; i <= 8; ++i) CHECK(three.find("id=\"v" + std::to_string(i) + "\"") != std::string::npos);

  const Scene four = figure_preset(4, cfg);
  bool has_p = false;
  for (const auto& item : four.items)
    if (const auto* m = std::get_if<MarkerItem>(&item)) has_p |= m->id == "P" && m->y == 0.0;
  CHECK(has_p);

  const Scene five = figure_preset(5, cfg);
  CHECK(five.count_regions() == 1);
  CHECK(render_scene(five).find("segment-G") != std::string::npos);

  CHECK_THROWS_AS(figure_preset(0, cfg), DomainError);
  CHECK_THROWS_AS(figure_preset(6, cfg), DomainError);
}

TEST_CASE("gap exaggeration is labeled") {
  RunConfig cfg;
  cfg.exaggerate_gaps = 1e10;
  const std::string svg = render_scene(figure_preset(2, cfg));
  CHECK(svg.find("exaggeration-note") != std::string::npos);
  cfg.exaggerate_gaps = 1.0;
  CHECK(render_scene(figure_preset(2, cfg)).find("exaggeration-note") == std::string::npos);
}

TEST_CASE("run_command exit codes") {
  RunConfig cfg;
  cfg.depth = 2;
  for (const auto& name : command_names()) {
    const CommandResult r = run_command(name, cfg);
    CHECK_MESSAGE(r.exit_code == kExitComputed, name << ": " << r.error);
  }
  CHECK(run_command("frobnicate", cfg).exit_code == kExitUsage);

  RunConfig shut;
  shut.kappa = 0;
  const CommandResult tangent = run_command("check-classical", shut);
  CHECK(tangent.exit_code == kExitComputed);
  CHECK(tangent.report.find("\"verdict\": \"fails\"") != std::string::npos);
  // Orbit gaps need a classical configuration.
  CHECK(run_command("psi", shut).exit_code == kExitNumeric);
}

TEST_CASE("reports carry schema, version and config") {
  RunConfig cfg;
  const Json report = Json::parse(run_command("diameter", cfg).report);
  CHECK(report["schema"] == "1");
  CHECK(report["tool"] == "schottky-forge");
  CHECK(report["version"] == kToolVersion);
  CHECK(report["config"]["kappa"] == "1/1000000000000");
  CHECK(report["config"]["precision_digits"] == 50);
}

TEST_CASE("bounds report both epsilon sources") {
  RunConfig cfg;
  cfg.kappa = Q("1e-11");
  cfg.lemma = "5";
  const Json r = Json::parse(run_command("bounds", cfg).report)["result"];
  REQUIRE(r["lemma25"].size() == 2);
  CHECK(r["lemma25"][0]["verdict"] == "holds");
  CHECK(r["lemma25"][1]["verdict"] == "fails");
  CHECK(r["lemma25_discrepancy"] == true);
  cfg.epsilon_source = EpsilonChoice::lemma22;
  const Json one = Json::parse(run_command("bounds", cfg).report)["result"];
  CHECK(one["lemma25"].size() == 1);
  CHECK_FALSE(one.contains("lemma25_discrepancy"));
}

TEST_CASE("reports are deterministic") {
  RunConfig cfg;
  cfg.depth = 3;
  for (const auto& name : command_names()) {
    const CommandResult a = run_command(name, cfg);
    const CommandResult b = run_command(name, cfg);
    CHECK(a.report == b.report);
    CHECK(a.svg == b.svg);
  }
  RunConfig many = cfg;
  many.workers = 4;
  // Worker count is not part of the reported config.
  CHECK(run_command("orbit", cfg).report == run_command("orbit", many).report);
}
