#include "tropigeo/json_io.hpp"

#include "tropigeo/error.hpp"

namespace tropigeo {

Json json_rational(const Rat& value) { return format_rational(value); }

Json json_scalar(const TropScalar& value) { return value.str(); }

Json json_vec2(const Vec2& value) {
  return Json::array({json_rational(value.x), json_rational(value.y)});
}

Json json_proj_point(const ProjPoint& value) {
  return Json::array({json_scalar(value[0]), json_scalar(value[1]), json_scalar(value[2])});
}

Json json_region(const Region& value) {
  Json j;
  j["x_min"] = json_rational(value.x_min());
  j["x_max"] = json_rational(value.x_max());
  j["y_min"] = json_rational(value.y_min());
  j["y_max"] = json_rational(value.y_max());
  return j;
}

Json json_tiling(const Tiling& tiling) {
  Json j;
  Json lengths = Json::array();
  for (const Rat& l : tiling.lengths.values()) lengths.push_back(json_rational(l));
  j["lengths"] = std::move(lengths);
  j["base"] = json_vec2(tiling.base);
  j["lattice_u"] = json_vec2(tiling.lattice_u);
  j["lattice_v"] = json_vec2(tiling.lattice_v);
  j["region"] = json_region(tiling.region);
  Json cells = Json::array();
  for (const TileCell& cell : tiling.cells) {
    Json c;
    c["index"] = Json::array({cell.index_u, cell.index_v});
    Json hexagon = Json::array();
    for (const Vec2& v : cell.hexagon) hexagon.push_back(json_vec2(v));
    c["hexagon"] = std::move(hexagon);
    Json triangle = Json::array();
    for (const Vec2& v : cell.triangle) triangle.push_back(json_vec2(v));
    c["triangle"] = std::move(triangle);
    cells.push_back(std::move(c));
  }
  j["cells"] = std::move(cells);
  return j;
}

namespace {

Rat rational_from_json(const Json& j) {
  if (!j.is_string()) throw ParseError("expected a rational encoded as a string");
  return parse_rational(j.get<std::string>());
}

Vec2 vec2_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("expected a two-entry point");
  return {rational_from_json(j[0]), rational_from_json(j[1])};
}

}  // namespace

ParsedTiling tiling_from_json(const Json& doc) {
  const Json& body = doc.contains("result") ? doc.at("result") : doc;
  if (!body.contains("region") || !body.contains("cells")) {
    throw ParseError("tiling document needs 'region' and 'cells'");
  }
  const Json& r = body.at("region");
  Region region(rational_from_json(r.at("x_min")), rational_from_json(r.at("x_max")),
                rational_from_json(r.at("y_min")), rational_from_json(r.at("y_max")));

  std::vector<TileCell> cells;
  for (const Json& c : body.at("cells")) {
    TileCell cell;
    if (c.contains("index") && c.at("index").is_array() && c.at("index").size() == 2) {
      cell.index_u = c.at("index")[0].get<long>();
      cell.index_v = c.at("index")[1].get<long>();
    }
    const Json& hexagon = c.at("hexagon");
    const Json& triangle = c.at("triangle");
    if (!hexagon.is_array() || hexagon.size() != 6 || !triangle.is_array() ||
        triangle.size() != 3) {
      throw ParseError("cell needs six hexagon vertices and three triangle vertices");
    }
    for (size_t i = 0; i < 6; ++i) cell.hexagon[i] = vec2_from_json(hexagon[i]);
    for (size_t i = 0; i < 3; ++i) cell.triangle[i] = vec2_from_json(triangle[i]);
    cells.push_back(std::move(cell));
  }
  return {std::move(cells), std::move(region)};
}

}  // namespace tropigeo
