#include "schottky/commands.hpp"
#include "schottky/errors.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace schottky;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("config", "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw std::runtime_error("cannot write " + path);
}

struct CliArgs {
  std::string command;
  std::string config_path;
  std::string preset, lambda, kappa, epsilon_source, lemma, epsilon, out, svg;
  unsigned depth = 0, workers = 1;
  int figure = 0;
  double exaggerate = 1.0;
};

RunConfig resolve(const CLI::App& app, const CliArgs& a) {
  RunConfig cfg = a.config_path.empty() ? RunConfig{} : parse_config(read_file(a.config_path));
  auto given = [&](const char* name) { return app.count(name) > 0; };
  auto exact = [](const std::string& text, const char* key) {
    try {
      return parse_rational(text);
    } catch (const DomainError& e) {
      throw ConfigError(key, e.what());
    }
  };
  if (given("--preset")) {
    try {
      cfg.preset = parse_preset(a.preset);
    } catch (const DomainError& e) {
      throw ConfigError("preset", e.what());
    }
    if (cfg.preset != Preset::custom) cfg.lambda = preset_lambda(cfg.preset);
  }
  if (given("--lambda")) {
    cfg.lambda = exact(a.lambda, "lambda");
    if (!given("--preset")) cfg.preset = Preset::custom;
  }
  if (given("--kappa")) cfg.kappa = exact(a.kappa, "kappa");
  if (given("--depth")) cfg.depth = a.depth;
  if (given("--epsilon-source")) {
    if (a.epsilon_source == "lemma22") cfg.epsilon_source = EpsilonChoice::lemma22;
    else if (a.epsilon_source == "lemma23") cfg.epsilon_source = EpsilonChoice::lemma23;
    else if (a.epsilon_source == "both") cfg.epsilon_source = EpsilonChoice::both;
    else throw ConfigError("epsilon_source", "expected lemma22, lemma23 or both");
  }
  if (given("--lemma")) cfg.lemma = a.lemma;
  if (given("--epsilon")) cfg.epsilon = a.epsilon;
  if (given("--figure")) cfg.figure = a.figure;
  if (given("--workers")) cfg.workers = a.workers;
  if (given("--exaggerate-gaps")) cfg.exaggerate_gaps = a.exaggerate;
  if (given("--out")) cfg.out = a.out;
  if (given("--svg")) cfg.svg = a.svg;
  validate(cfg);
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact construction and checking of a rank-2 Fuchsian Schottky family", kToolName};
  app.set_version_flag("--version", std::string(kToolVersion));
  CliArgs a;
  app.add_option("command", a.command, "construct | check-classical | orbit | bounds | psi | diameter | render")
      ->required()
      ->check(CLI::IsMember(command_names()));
  app.add_option("--config", a.config_path, "JSON configuration file; flags override it");
  app.add_option("--preset", a.preset, "lambda2 | lambda5over3 | lambda5over3-decimal | custom");
  app.add_option("--lambda", a.lambda, "lambda as p/q or exact decimal (implies custom)");
  app.add_option("--kappa", a.kappa, "kappa as exact decimal or p/q");
  app.add_option("--depth", a.depth, "orbit word length, 0..10");
  app.add_option("--epsilon-source", a.epsilon_source, "lemma22 | lemma23 | both");
  app.add_option("--lemma", a.lemma, "bounds to evaluate: 2 | 3 | 4 | 5 | all");
  app.add_option("--epsilon", a.epsilon, "epsilon for the ray-gap bound (--lemma 4)");
  app.add_option("--figure", a.figure, "render a figure analogue 1..5 instead of the orbit");
  app.add_option("--workers", a.workers, "orbit worker threads, 1..64");
  app.add_option("--exaggerate-gaps", a.exaggerate, "visual gap factor for rendering (>= 1)");
  app.add_option("--out", a.out, "report path (default stdout)");
  app.add_option("--svg", a.svg, "SVG path for render (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitComputed : kExitUsage;
  }

  RunConfig cfg;
  try {
    cfg = resolve(app, a);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  const CommandResult r = run_command(a.command, cfg);
  if (r.exit_code != kExitComputed) {
    std::cerr << (r.exit_code == kExitUsage ? "config error: " : "error: ") << r.error << "\n";
    return r.exit_code;
  }
  try {
    // render with no --svg sends the SVG to stdout, so the report needs --out.
    if (a.command == "render" && cfg.svg.empty()) {
      std::cout << r.svg;
      if (!cfg.out.empty()) write_file(cfg.out, r.report);
      return kExitComputed;
    }
    if (!cfg.svg.empty() && a.command == "render") write_file(cfg.svg, r.svg);
    if (cfg.out.empty()) std::cout << r.report;
    else write_file(cfg.out, r.report);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
  return kExitComputed;
}
