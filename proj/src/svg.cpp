#include "schottky/svg.hpp"

#include "schottky/errors.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace schottky {

namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s(buf);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

std::string escape(const std::string& text) {
  std::string out;
  for (char ch : text) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

class Frame {
public:
  explicit Frame(const Viewport& v) : v_(v) {
    if (!(v.xmax > v.xmin) || !(v.ymax > v.ymin) || v.width <= 0 || v.height <= 0 || !std::isfinite(v.xmin) ||
        !std::isfinite(v.xmax) || !std::isfinite(v.ymin) || !std::isfinite(v.ymax)) {
      throw DomainError("degenerate viewport");
    }
    sx_ = v.width / (v.xmax - v.xmin);
    sy_ = v.height / (v.ymax - v.ymin);
  }
  double x(double mx) const { return (mx - v_.xmin) * sx_; }
  double y(double my) const { return v_.height - (my - v_.ymin) * sy_; }
  double rx(double r) const { return r * sx_; }
  double ry(double r) const { return r * sy_; }

  // Upper half-disk outline from lo to hi, optionally closed along the diameter.
  std::string half_disk(double lo, double hi, bool close) const {
    const double r = 0.5 * (hi - lo);
    std::string d = "M " + num(x(lo)) + " " + num(y(0)) + " A " + num(rx(r)) + " " + num(ry(r)) + " 0 0 1 " +
                    num(x(hi)) + " " + num(y(0));
    return close ? d + " Z" : d;
  }

  const Viewport& viewport() const { return v_; }

private:
  Viewport v_;
  double sx_ = 1.0, sy_ = 1.0;
};

struct Writer {
  const Frame& f;
  std::ostringstream& os;

  void operator()(const RegionItem& r) const {
    const Viewport& v = f.viewport();
    std::string d;
    if (r.outer) {
      d = f.half_disk(r.outer->first, r.outer->second, true);
    } else {
      d = "M " + num(f.x(v.xmin)) + " " + num(f.y(0)) + " L " + num(f.x(v.xmax)) + " " + num(f.y(0)) + " L " +
          num(f.x(v.xmax)) + " " + num(f.y(v.ymax)) + " L " + num(f.x(v.xmin)) + " " + num(f.y(v.ymax)) + " Z";
    }
    for (const auto& [lo, hi] : r.holes) d += " " + f.half_disk(lo, hi, true);
    os << "  <path id=\"" << escape(r.id) << "\" class=\"region " << escape(r.css) << "\" fill=\"" << escape(r.color)
       << "\" fill-opacity=\"0.6\" fill-rule=\"evenodd\" stroke=\"none\" d=\"" << d << "\"/>\n";
  }
  void operator()(const ArcItem& a) const {
    const Viewport& v = f.viewport();
    std::string d = a.vertical ? "M " + num(f.x(a.lo)) + " " + num(f.y(0)) + " L " + num(f.x(a.lo)) + " " + num(f.y(v.ymax))
                               : f.half_disk(a.lo, a.hi, false);
    os << "  <path id=\"" << escape(a.id) << "\" class=\"arc " << escape(a.css) << "\" fill=\"none\" stroke=\""
       << escape(a.color) << "\" d=\"" << d << "\"/>\n";
  }
  void operator()(const SegmentItem& s) const {
    os << "  <line id=\"" << escape(s.id) << "\" class=\"segment " << escape(s.css) << "\" x1=\"" << num(f.x(s.x0))
       << "\" y1=\"" << num(f.y(s.y0)) << "\" x2=\"" << num(f.x(s.x1)) << "\" y2=\"" << num(f.y(s.y1)) << "\" stroke=\""
       << escape(s.color) << "\"/>\n";
  }
  void operator()(const MarkerItem& m) const {
    os << "  <circle id=\"" << escape(m.id) << "\" class=\"marker\" cx=\"" << num(f.x(m.x)) << "\" cy=\""
       << num(f.y(m.y)) << "\" r=\"3.000000\"/>\n";
    if (!m.text.empty()) {
      os << "  <text id=\"" << escape(m.id) << "-label\" class=\"marker-label\" x=\"" << num(f.x(m.x) + 4.0)
         << "\" y=\"" << num(f.y(m.y) - 6.0) << "\">" << escape(m.text) << "</text>\n";
    }
  }
  void operator()(const LabelItem& l) const {
    os << "  <text id=\"" << escape(l.id) << "\" class=\"label\" x=\"" << num(f.x(l.x)) << "\" y=\"" << num(f.y(l.y))
       << "\">" << escape(l.text) << "</text>\n";
  }
};

int draw_order(const SceneItem& item) {
  return std::visit(
      [](const auto& it) {
        using T = std::decay_t<decltype(it)>;
        if constexpr (std::is_same_v<T, RegionItem>) return 0;
        else if constexpr (std::is_same_v<T, ArcItem>) return 1;
        else if constexpr (std::is_same_v<T, SegmentItem>) return 2;
        else if constexpr (std::is_same_v<T, MarkerItem>) return 3;
        else return 4;
      },
      item);
}

}  // namespace

std::string render_scene(const Scene& scene) {
  const Frame f(scene.viewport);
  const Viewport& v = scene.viewport;
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << v.width << "\" height=\"" << v.height
     << "\" viewBox=\"0 0 " << v.width << " " << v.height << "\">\n";
  os << "  <title>" << escape(scene.title) << "</title>\n";
  os << "  <g id=\"scene\" stroke-width=\"" << num(scene.stroke_width) << "\" font-family=\"sans-serif\" font-size=\"11\">\n";

  const Writer w{f, os};
  for (int pass = 0; pass < 5; ++pass) {
    if (pass == 1) {
      os << "  <line id=\"real-axis\" class=\"axis\" x1=\"" << num(f.x(v.xmin)) << "\" y1=\"" << num(f.y(0)) << "\" x2=\""
         << num(f.x(v.xmax)) << "\" y2=\"" << num(f.y(0)) << "\" stroke=\"" << escape(scene.axis_color) << "\"/>\n";
      if (scene.imaginary_axis && v.xmin < 0 && v.xmax > 0) {
        os << "  <line id=\"imaginary-axis\" class=\"axis\" x1=\"" << num(f.x(0)) << "\" y1=\"" << num(f.y(0))
           << "\" x2=\"" << num(f.x(0)) << "\" y2=\"" << num(f.y(v.ymax)) << "\" stroke=\"" << escape(scene.axis_color)
           << "\" stroke-dasharray=\"4 3\"/>\n";
      }
    }
    for (const auto& item : scene.items) {
      if (draw_order(item) == pass) std::visit(w, item);
    }
  }
  os << "  </g>\n</svg>\n";
  return os.str();
}

}  // namespace schottky
