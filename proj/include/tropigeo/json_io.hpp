#pragma once

#include "tropigeo/geom2d.hpp"
#include "tropigeo/point.hpp"
#include "tropigeo/tess.hpp"

#include <json.hpp>

#include <string>

namespace tropigeo {

using Json = nlohmann::ordered_json;

Json json_rational(const Rat& value);            // "p/q" string
Json json_scalar(const TropScalar& value);       // rational string or "-inf"
Json json_vec2(const Vec2& value);               // ["x","y"]
Json json_proj_point(const ProjPoint& value);    // ["x","y","z"]
Json json_region(const Region& value);

Json json_tiling(const Tiling& tiling);

// Reads back the output of json_tiling (or the full CLI envelope around it).
struct ParsedTiling {
  std::vector<TileCell> cells;
  Region region;
};
ParsedTiling tiling_from_json(const Json& doc);

}  // namespace tropigeo
