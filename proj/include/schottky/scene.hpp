#pragma once

#include "schottky/config.hpp"

#include <string>
#include <variant>
#include <vector>

namespace schottky {

// Model-space drawables. Every item carries a stable id for golden diffs.
struct ArcItem {
  std::string id;
  double lo = 0.0;        // left endpoint, or x of a vertical line
  double hi = 0.0;        // right endpoint (ignored for lines)
  bool vertical = false;
  std::string css;        // "base", "depth-3", "tangent", ...
  std::string color;
};

struct SegmentItem {
  std::string id;
  double x0 = 0.0, y0 = 0.0, x1 = 0.0, y1 = 0.0;
  std::string css;
  std::string color;
};

// Upper half of the viewport minus the listed half-disks (fundamental domain),
// or the annulus between two half-disks when `outer` is set.
struct RegionItem {
  std::string id;
  std::vector<std::pair<double, double>> holes;   // (lo, hi) of removed half-disks
  std::optional<std::pair<double, double>> outer; // bounded by this half-disk instead of the viewport
  std::string css;
  std::string color;
};

struct LabelItem {
  std::string id;
  double x = 0.0, y = 0.0;
  std::string text;
};

struct MarkerItem {
  std::string id;
  double x = 0.0, y = 0.0;
  std::string text;
};

using SceneItem = std::variant<ArcItem, SegmentItem, RegionItem, LabelItem, MarkerItem>;

struct Viewport {
  double xmin = -6.0, xmax = 6.0;
  double ymin = -0.5, ymax = 4.0;
  int width = 960, height = 360;
};

struct Scene {
  std::string title;
  Viewport viewport;
  bool imaginary_axis = false;
  std::string axis_color = "#333333";
  double stroke_width = 1.5;
  std::vector<SceneItem> items;

  std::size_t count_arcs() const;
  std::size_t count_regions() const;
};

// Orbit circles to cfg.depth plus the shaded fundamental domain (when the
// configuration is classical).
Scene orbit_scene(const RunConfig& cfg);

// Analogues of the construction's five figures. Throws DomainError for n
// outside 1..5.
Scene figure_preset(int n, const RunConfig& cfg);

}  // namespace schottky
