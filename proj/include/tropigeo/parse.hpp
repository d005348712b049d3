#pragma once

#include "tropigeo/geom2d.hpp"
#include "tropigeo/matrix.hpp"
#include "tropigeo/point.hpp"

#include <string_view>
#include <vector>

namespace tropigeo {

// "x" | "y" | "z" (case-insensitive).
Chart parse_chart(std::string_view text);

// "[x,y,z]" with rational or "-inf" entries.
ProjPoint parse_proj_point(std::string_view text);

// "(x,y)".
AffinePoint parse_affine_point(std::string_view text);

// Either syntax; affine points are embedded through the chart.
ProjPoint parse_point(std::string_view text, Chart chart);

// "(x,y)" with finite entries.
Vec2 parse_vec2(std::string_view text);

// Rows separated by ';', entries by ','.
TropMatrix parse_matrix(std::string_view text);

// Comma-separated rationals.
std::vector<Rat> parse_rational_list(std::string_view text);

// "x_min,x_max,y_min,y_max".
Region parse_region(std::string_view text);

}  // namespace tropigeo
