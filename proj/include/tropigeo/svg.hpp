#pragma once

#include "tropigeo/geom2d.hpp"

#include <string>
#include <variant>
#include <vector>

namespace tropigeo {

struct PointMark {
  std::string label;
  Vec2 position;
};

// Tropical line in chart coordinates: three rays leave the vertex West,
// South and North-East.
struct LineFigure {
  std::string label;
  Vec2 vertex;
};

struct PolygonFigure {
  std::string label;
  Polygon vertices;
};

struct TilingFigure {
  std::string label;
  std::vector<Polygon> hexagons;
};

using SceneElement = std::variant<PointMark, LineFigure, PolygonFigure, TilingFigure>;

struct SvgStyle {
  std::string point_color = "#1a1a1a";
  std::string line_color = "#2166ac";
  std::string polygon_stroke = "#b2182b";
  std::string polygon_fill = "#fddbc7";
  std::string tiling_stroke = "#4d4d4d";
  std::string tiling_fill = "#e6f0e6";
};

// Drawable scene over an explicit rational viewport; labels must be unique.
struct Scene {
  Region viewport;
  std::vector<SceneElement> elements;
  SvgStyle style;
};

// Deterministic SVG 1.1 document: identical scenes render to identical
// bytes. The y axis points up; rays are clipped to the viewport plus a
// small margin.
std::string render_svg(const Scene& scene);

}  // namespace tropigeo
