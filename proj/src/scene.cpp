#include "schottky/scene.hpp"

#include "schottky/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>

namespace schottky {

std::size_t Scene::count_arcs() const {
  return std::count_if(items.begin(), items.end(), [](const SceneItem& i) { return std::holds_alternative<ArcItem>(i); });
}

std::size_t Scene::count_regions() const {
  return std::count_if(items.begin(), items.end(),
                       [](const SceneItem& i) { return std::holds_alternative<RegionItem>(i); });
}

namespace {

constexpr std::array<const char*, 11> kDepthColors = {"#c0392b", "#2980b9", "#27ae60", "#8e44ad", "#d35400", "#16a085",
                                                      "#2c3e50", "#f39c12", "#7f8c8d", "#e84393", "#00b894"};

struct Disk {
  double lo = 0.0;
  double hi = 0.0;
  double center() const { return 0.5 * (lo + hi); }
  double radius() const { return 0.5 * (hi - lo); }
};

// Shrinks a circle about its center so kappa-sized gaps become visible.
Disk displayed(const Semicircle& c, const RunConfig& cfg) {
  Disk d{c.p().to_double(), c.q().to_double()};
  if (cfg.exaggerate_gaps > 1.0) {
    const double shrink = std::max(0.5, 1.0 - to_double(cfg.kappa) * (cfg.exaggerate_gaps - 1.0));
    const double m = d.center(), r = d.radius() * shrink;
    d = {m - r, m + r};
  }
  return d;
}

Viewport fit(const RunConfig& cfg, double xmin, double xmax) {
  Viewport v;
  v.width = cfg.render.width;
  v.height = cfg.render.height;
  v.xmin = cfg.render.xmin.value_or(xmin);
  v.xmax = cfg.render.xmax.value_or(xmax);
  const double yspan = (v.xmax - v.xmin) * v.height / v.width;
  v.ymin = -0.1 * yspan;
  v.ymax = cfg.render.ymax.value_or(0.9 * yspan);
  return v;
}

Scene base_scene(const RunConfig& cfg, std::string title) {
  Scene s;
  s.title = std::move(title);
  const double outer = to_double(cfg.lambda) + 4.0;
  s.viewport = fit(cfg, -outer, outer);
  s.axis_color = cfg.render.axis_color;
  s.stroke_width = cfg.render.stroke_width;
  return s;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

void add_exaggeration_label(Scene& s, const RunConfig& cfg) {
  if (cfg.exaggerate_gaps <= 1.0) return;
  s.items.push_back(LabelItem{"exaggeration-note", s.viewport.xmin + 0.02 * (s.viewport.xmax - s.viewport.xmin),
                              s.viewport.ymax * 0.92, "gap exaggeration x" + fmt(cfg.exaggerate_gaps) + " (visual only)"});
}

void add_base_arcs(Scene& s, const SchottkySystem& sys, const RunConfig& cfg) {
  for (int i = 0; i < 4; ++i) {
    const Disk d = displayed(sys.circles[i], cfg);
    s.items.push_back(ArcItem{"arc-" + circle_label(i), d.lo, d.hi, false, "base", cfg.render.circle_color});
  }
}

void add_domain(Scene& s, const SchottkySystem& sys, const RunConfig& cfg) {
  RegionItem r{"fundamental-domain", {}, std::nullopt, "fundamental-domain", cfg.render.region_color};
  for (const auto& c : sys.circles) {
    const Disk d = displayed(c, cfg);
    r.holes.emplace_back(d.lo, d.hi);
  }
  s.items.push_back(std::move(r));
}

void add_tau_markers(Scene& s, const RunConfig& cfg) {
  const double tau = derived_constants(cfg.params()).tau.to_double();
  s.items.push_back(MarkerItem{"tau-minus", -tau, 0.0, "-tau"});
  s.items.push_back(MarkerItem{"tau-plus", tau, 0.0, "tau"});
}

// Two consecutive members of the nested family (outer first), or SC4 and its
// image under the inverse of B when the family is too short.
std::pair<Semicircle, Semicircle> consecutive_pair(const RunConfig& cfg) {
  const PaperParams p = cfg.params();
  const SchottkySystem sys = build_circles(p);
  const NestedFamily fam = nested_family(sys, 1, derived_constants(p).tau, p.lambda);
  if (fam.chain.size() >= 2) return {fam.chain[0].entry.circle, fam.chain[1].entry.circle};
  return {sys.circles[3], image_under_map(sys.circles[3], inverse(sys.pairings[1].map))};
}

Scene zoomed_scene(const RunConfig& cfg, std::string title, const Disk& outer) {
  Scene s = base_scene(cfg, std::move(title));
  // Wide enough that the top of the outer circle stays below ymax.
  const double aspect = static_cast<double>(cfg.render.width) / cfg.render.height;
  const double half = outer.radius() * std::max(1.4, 1.1 * aspect / 1.8);
  s.viewport = fit(cfg, outer.center() - half, outer.center() + half);
  return s;
}

Scene figure_tangent_construction(const RunConfig& cfg) {
  const auto [cj, cj1] = consecutive_pair(cfg);
  const Disk outer{cj.p().to_double(), cj.q().to_double()};
  const Disk inner{cj1.p().to_double(), cj1.q().to_double()};
  Scene s = zoomed_scene(cfg, "tangent-circle construction between consecutive circles", outer);
  s.imaginary_axis = true;
  s.items.push_back(ArcItem{"arc-SC-j", outer.lo, outer.hi, false, "chain", cfg.render.circle_color});
  s.items.push_back(ArcItem{"arc-SC-j1", inner.lo, inner.hi, false, "chain", kDepthColors[1]});

  const double dj = std::abs(outer.center() - inner.center());
  const double rt = outer.radius() - dj;
  const double dir = inner.center() >= outer.center() ? 1.0 : -1.0;
  const double px = outer.center() + dir * outer.radius();
  if (rt > 0) {
    const Disk t{inner.center() - rt, inner.center() + rt};
    s.items.push_back(ArcItem{"arc-SC-kappa", t.lo, t.hi, false, "tangent", kDepthColors[2]});
    // Y'_k: outer intersection of the tangent circle with each axis ray.
    if (t.hi > 0) s.items.push_back(MarkerItem{"Y-prime-1", t.hi, 0.0, "Y'1"});
    if (t.lo < 0 && t.hi > 0) {
      const double h = std::sqrt(rt * rt - t.center() * t.center());
      s.items.push_back(MarkerItem{"Y-prime-2", 0.0, h, "Y'2"});
    }
    if (t.lo < 0) s.items.push_back(MarkerItem{"Y-prime-3", t.lo, 0.0, "Y'3"});
  }
  s.items.push_back(MarkerItem{"P", px, 0.0, "P"});
  add_exaggeration_label(s, cfg);
  return s;
}

Scene figure_doubly_connected(const RunConfig& cfg) {
  const auto [cj, cj1] = consecutive_pair(cfg);
  const Disk outer{cj.p().to_double(), cj.q().to_double()};
  const Disk inner{cj1.p().to_double(), cj1.q().to_double()};
  Scene s = zoomed_scene(cfg, "doubly-connected region between consecutive circles", outer);
  s.imaginary_axis = true;
  RegionItem v{"region-V", {{inner.lo, inner.hi}}, std::pair{outer.lo, outer.hi}, "doubly-connected",
               cfg.render.region_color};
  s.items.push_back(std::move(v));
  s.items.push_back(ArcItem{"arc-SC-j", outer.lo, outer.hi, false, "chain", cfg.render.circle_color});
  s.items.push_back(ArcItem{"arc-SC-j1", inner.lo, inner.hi, false, "chain", kDepthColors[1]});
  // G: the part of V on the imaginary axis, or on the vertical through the inner center.
  double gx = 0.0;
  if (!(outer.lo < 0 && outer.hi > 0)) gx = inner.center();
  auto height = [](const Disk& d, double x) {
    const double u = d.radius() * d.radius() - (x - d.center()) * (x - d.center());
    return u > 0 ? std::sqrt(u) : 0.0;
  };
  s.items.push_back(SegmentItem{"segment-G", gx, height(inner, gx), gx, height(outer, gx), "G", "#e74c3c"});
  s.items.push_back(LabelItem{"label-G", gx, 0.5 * (height(inner, gx) + height(outer, gx)), "G"});
  s.items.push_back(LabelItem{"label-V", outer.center(), outer.radius() * 0.85, "V"});
  add_exaggeration_label(s, cfg);
  return s;
}

}  // namespace

Scene orbit_scene(const RunConfig& cfg) {
  const PaperParams p = cfg.params();
  const SchottkySystem sys = build_circles(p);
  Scene s = base_scene(cfg, "orbit circles to depth " + std::to_string(cfg.depth));
  if (classical_check(sys).passed()) add_domain(s, sys, cfg);
  for (const auto& e : orbit_circles(sys, cfg.depth, cfg.workers)) {
    const std::string id = "arc-" + circle_label(e.seed) + (e.word.empty() ? "" : "-" + e.word.str());
    const std::string color = e.depth() == 0 ? cfg.render.circle_color : kDepthColors[e.depth() % kDepthColors.size()];
    if (e.circle.is_line()) {
      s.items.push_back(ArcItem{id, e.circle.p().to_double(), 0.0, true, "depth-" + std::to_string(e.depth()), color});
      continue;
    }
    const Disk d = displayed(e.circle, cfg);
    s.items.push_back(ArcItem{id, d.lo, d.hi, false, "depth-" + std::to_string(e.depth()), color});
  }
  add_tau_markers(s, cfg);
  add_exaggeration_label(s, cfg);
  return s;
}

Scene figure_preset(int n, const RunConfig& cfg) {
  const PaperParams p = cfg.params();
  const SchottkySystem sys = build_circles(p);
  switch (n) {
    case 1: {
      Scene s = base_scene(cfg, "classical rank-2 configuration");
      if (classical_check(sys).passed()) add_domain(s, sys, cfg);
      add_base_arcs(s, sys, cfg);
      s.items.push_back(LabelItem{"label-F", 0.0, 0.6 * s.viewport.ymax, "F"});
      add_exaggeration_label(s, cfg);
      return s;
    }
    case 2: {
      Scene s = base_scene(cfg, "four circles with half-moon Jordan curves");
      add_base_arcs(s, sys, cfg);
      for (int i = 0; i < 4; ++i) {
        const Disk d = displayed(sys.circles[i], cfg);
        s.items.push_back(SegmentItem{"chord-" + circle_label(i), d.lo, 0.0, d.hi, 0.0, "halfmoon", "#e74c3c"});
        s.items.push_back(LabelItem{"label-" + circle_label(i), d.center(), d.radius() * 1.08, circle_label(i)});
      }
      add_tau_markers(s, cfg);
      add_exaggeration_label(s, cfg);
      return s;
    }
    case 3: {
      Scene s = base_scene(cfg, "fundamental domain");
      if (classical_check(sys).passed()) add_domain(s, sys, cfg);
      add_base_arcs(s, sys, cfg);
      std::vector<double> vertices;
      for (int i = 0; i < 4; ++i) {
        const Disk d = displayed(sys.circles[i], cfg);
        vertices.push_back(d.lo);
        vertices.push_back(d.hi);
      }
      std::sort(vertices.begin(), vertices.end());
      for (std::size_t i = 0; i < vertices.size(); ++i) {
        s.items.push_back(MarkerItem{"v" + std::to_string(i + 1), vertices[i], 0.0, "v" + std::to_string(i + 1)});
      }
      s.items.push_back(LabelItem{"label-F", 0.0, 0.6 * s.viewport.ymax, "F"});
      add_exaggeration_label(s, cfg);
      return s;
    }
    case 4: return figure_tangent_construction(cfg);
    case 5: return figure_doubly_connected(cfg);
    default: break;
  }
  throw DomainError("figure must be 1..5, got " + std::to_string(n));
}

}  // namespace schottky
