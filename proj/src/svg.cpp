#include "tropigeo/svg.hpp"

#include "tropigeo/error.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace tropigeo {

namespace {

constexpr int kFractionDigits = 4;
const Rat kCanvasWidth = 720;

struct Frame {
  Rat x0, y0, x1, y1;  // world window actually drawn (viewport plus margin)
  Rat scale;

  Vec2 to_screen(const Vec2& w) const {
    return {(w.x - x0) * scale, (y1 - w.y) * scale};
  }
};

std::string num(const Rat& r) { return decimal_string(r, kFractionDigits); }

std::string xy_attr(const Frame& f, const Vec2& w, const char* xa, const char* ya) {
  const Vec2 s = f.to_screen(w);
  return std::string(" ") + xa + "=\"" + num(s.x) + "\" " + ya + "=\"" + num(s.y) + "\"";
}

std::string points_attr(const Frame& f, const Polygon& poly) {
  std::string out = " points=\"";
  for (size_t i = 0; i < poly.size(); ++i) {
    if (i) out += " ";
    const Vec2 s = f.to_screen(poly[i]);
    out += num(s.x) + "," + num(s.y);
  }
  return out + "\"";
}

// Visible part of the ray p + t*d, t >= 0, inside the frame window.
std::optional<std::pair<Vec2, Vec2>> clip_ray(const Frame& f, const Vec2& p, int dx, int dy) {
  Rat t_lo = 0;
  std::optional<Rat> t_hi;
  const auto narrow = [&](const Rat& pos, int d, const Rat& lo, const Rat& hi) -> bool {
    if (d == 0) return pos >= lo && pos <= hi;
    Rat ta = (lo - pos) / d;
    Rat tb = (hi - pos) / d;
    if (ta > tb) std::swap(ta, tb);
    t_lo = std::max(t_lo, ta);
    t_hi = t_hi ? std::min(*t_hi, tb) : tb;
    return true;
  };
  if (!narrow(p.x, dx, f.x0, f.x1)) return std::nullopt;
  if (!narrow(p.y, dy, f.y0, f.y1)) return std::nullopt;
  if (!t_hi || t_lo > *t_hi) return std::nullopt;
  const Vec2 from{p.x + t_lo * dx, p.y + t_lo * dy};
  const Vec2 to{p.x + *t_hi * dx, p.y + *t_hi * dy};
  return std::make_pair(from, to);
}

void render_line_figure(std::string& out, const Frame& f, const SvgStyle& style,
                        const LineFigure& fig) {
  out += "<g class=\"line\" data-label=\"" + fig.label + "\" stroke=\"" + style.line_color +
         "\" stroke-width=\"1.5\" fill=\"none\">\n";
  constexpr int dirs[3][2] = {{-1, 0}, {0, -1}, {1, 1}};
  for (const auto& d : dirs) {
    if (auto seg = clip_ray(f, fig.vertex, d[0], d[1])) {
      const Vec2 a = f.to_screen(seg->first);
      const Vec2 b = f.to_screen(seg->second);
      out += "<line x1=\"" + num(a.x) + "\" y1=\"" + num(a.y) + "\" x2=\"" + num(b.x) +
             "\" y2=\"" + num(b.y) + "\"/>\n";
    }
  }
  out += "<circle" + xy_attr(f, fig.vertex, "cx", "cy") + " r=\"2.5\" fill=\"" +
         style.line_color + "\" stroke=\"none\"/>\n";
  out += "</g>\n";
}

void render_point(std::string& out, const Frame& f, const SvgStyle& style, const PointMark& p) {
  out += "<g class=\"point\" data-label=\"" + p.label + "\">\n";
  out += "<circle" + xy_attr(f, p.position, "cx", "cy") + " r=\"3.5\" fill=\"" +
         style.point_color + "\"/>\n";
  const Vec2 s = f.to_screen(p.position);
  out += "<text x=\"" + num(s.x + 6) + "\" y=\"" + num(s.y - 6) +
         "\" font-family=\"sans-serif\" font-size=\"13\" fill=\"" + style.point_color + "\">" +
         p.label + "</text>\n";
  out += "</g>\n";
}

void render_polygon(std::string& out, const Frame& f, const PolygonFigure& fig,
                    const std::string& stroke, const std::string& fill) {
  out += "<polygon class=\"hexagon\" data-label=\"" + fig.label + "\"" +
         points_attr(f, fig.vertices) + " stroke=\"" + stroke +
         "\" stroke-width=\"1.5\" fill=\"" + fill + "\" fill-opacity=\"0.55\"/>\n";
}

}  // namespace

std::string render_svg(const Scene& scene) {
  std::set<std::string> labels;
  const auto check_label = [&](const std::string& label) {
    if (!labels.insert(label).second) {
      throw DomainError("duplicate scene label '" + label + "'");
    }
  };
  for (const SceneElement& e : scene.elements) {
    std::visit([&](const auto& fig) { check_label(fig.label); }, e);
  }

  const Rat margin = std::max(scene.viewport.width(), scene.viewport.height()) / 20;
  Frame f;
  f.x0 = scene.viewport.x_min() - margin;
  f.x1 = scene.viewport.x_max() + margin;
  f.y0 = scene.viewport.y_min() - margin;
  f.y1 = scene.viewport.y_max() + margin;
  f.scale = kCanvasWidth / (f.x1 - f.x0);
  const Rat canvas_h = (f.y1 - f.y0) * f.scale;

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         num(kCanvasWidth) + "\" height=\"" + num(canvas_h) + "\" viewBox=\"0 0 " +
         num(kCanvasWidth) + " " + num(canvas_h) + "\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + num(kCanvasWidth) + "\" height=\"" + num(canvas_h) +
         "\" fill=\"#ffffff\"/>\n";

  for (const SceneElement& e : scene.elements) {
    if (const auto* tiling = std::get_if<TilingFigure>(&e)) {
      out += "<g class=\"tiling\" data-label=\"" + tiling->label + "\">\n";
      for (size_t i = 0; i < tiling->hexagons.size(); ++i) {
        PolygonFigure cell{tiling->label + "#" + std::to_string(i), tiling->hexagons[i]};
        render_polygon(out, f, cell, scene.style.tiling_stroke, scene.style.tiling_fill);
      }
      out += "</g>\n";
    } else if (const auto* poly = std::get_if<PolygonFigure>(&e)) {
      render_polygon(out, f, *poly, scene.style.polygon_stroke, scene.style.polygon_fill);
    } else if (const auto* line = std::get_if<LineFigure>(&e)) {
      render_line_figure(out, f, scene.style, *line);
    } else if (const auto* point = std::get_if<PointMark>(&e)) {
      render_point(out, f, scene.style, *point);
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace tropigeo
