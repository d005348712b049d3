#include "tropigeo/cli.hpp"

#include "tropigeo/collapse_catalog.hpp"
#include "tropigeo/error.hpp"
#include "tropigeo/hexagon.hpp"
#include "tropigeo/json_io.hpp"
#include "tropigeo/line.hpp"
#include "tropigeo/parse.hpp"
#include "tropigeo/span.hpp"
#include "tropigeo/svg.hpp"
#include "tropigeo/tess.hpp"
#include "tropigeo/triangle.hpp"

#include <CLI11.hpp>

#include <array>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace tropigeo {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;
constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;

struct Output {
  std::string out_file;  // empty: stdout

  void emit(const std::string& text) const {
    if (out_file.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(out_file, std::ios::binary);
    if (!f) throw DomainError("cannot open output file '" + out_file + "'");
    f << text;
  }
};

struct Ctx {
  Chart chart = Chart::Z;
  bool json = false;
  Output out;
  int max_dim = kDefaultPermanentDimLimit;
};

std::string envelope(const std::string& op, Json inputs, Json result,
                     Json witness = nullptr) {
  Json j;
  j["op"] = op;
  j["inputs"] = std::move(inputs);
  j["result"] = std::move(result);
  j["witness"] = std::move(witness);
  return j.dump(2) + "\n";
}

std::string affine_str(Chart chart, const ProjPoint& p) {
  return chart_extract(chart, p)->str();
}

Json json_lengths(const std::array<Rat, 6>& lengths) {
  Json out = Json::array();
  for (const Rat& l : lengths) out.push_back(json_rational(l));
  return out;
}

int cmd_det(const Ctx& ctx, const std::string& n_arg, const std::string& matrix_arg) {
  int n = 0;
  try {
    n = std::stoi(n_arg);
  } catch (const std::exception&) {
    throw ParseError("dimension must be an integer");
  }
  const TropMatrix m = parse_matrix(matrix_arg);
  if (m.rows() != n || m.cols() != n) {
    throw ParseError("matrix shape does not match the declared dimension");
  }
  const PermanentResult r = trop_det(m, ctx.max_dim);
  if (ctx.json) {
    Json inputs;
    inputs["n"] = n;
    Json rows = Json::array();
    for (int i = 0; i < n; ++i) {
      Json row = Json::array();
      for (int j = 0; j < n; ++j) row.push_back(json_scalar(m.at(i, j)));
      rows.push_back(std::move(row));
    }
    inputs["matrix"] = std::move(rows);
    Json result;
    result["value"] = json_scalar(r.value);
    result["optimal_count"] = r.optimal_count;
    result["regular"] = r.regular;
    ctx.out.emit(envelope("det", std::move(inputs), std::move(result)));
  } else {
    ctx.out.emit("value=" + r.value.str() + " regular=" + (r.regular ? "true" : "false") + "\n");
  }
  return kExitOk;
}

int cmd_point_pair(const Ctx& ctx, const std::string& op, const std::string& lhs,
                   const std::string& rhs) {
  const ProjPoint a = parse_point(lhs, ctx.chart);
  const ProjPoint b = parse_point(rhs, ctx.chart);
  ProjPoint result = [&] {
    if (op == "cross") return cross_product(a, b);
    if (op == "join") return stable_join(a, b).coeffs();
    return stable_intersection(TropLine(a), TropLine(b));
  }();
  if (ctx.json) {
    Json inputs;
    inputs[op == "meet" ? "l" : "a"] = json_proj_point(a);
    inputs[op == "meet" ? "m" : "b"] = json_proj_point(b);
    Json res;
    res[op == "join" ? "line" : "point"] = json_proj_point(result);
    ctx.out.emit(envelope(op, std::move(inputs), std::move(res)));
  } else {
    ctx.out.emit(result.str() + "\n");
  }
  return kExitOk;
}

int cmd_incident(const Ctx& ctx, const std::string& point_arg, const std::string& line_arg) {
  const ProjPoint q = parse_point(point_arg, ctx.chart);
  const TropLine line(parse_point(line_arg, ctx.chart));
  const bool hit = incident(q, line);
  if (ctx.json) {
    Json inputs;
    inputs["point"] = json_proj_point(q);
    inputs["line"] = json_proj_point(line.coeffs());
    Json res;
    res["incident"] = hit;
    ctx.out.emit(envelope("incident", std::move(inputs), std::move(res)));
  } else {
    ctx.out.emit(hit ? "true\n" : "false\n");
  }
  return hit ? kExitOk : kExitFalse;
}

int cmd_classify(const Ctx& ctx, const std::vector<std::string>& point_args) {
  const ProjPoint a = parse_point(point_args[0], ctx.chart);
  const ProjPoint b = parse_point(point_args[1], ctx.chart);
  const ProjPoint c = parse_point(point_args[2], ctx.chart);
  const TriangleClass cls = classify_triangle(a, b, c, ctx.chart);

  std::string text(to_string(cls.kind));
  Json result;
  result["class"] = std::string(to_string(cls.kind));
  if (cls.kind == TriangleKind::Transversal) {
    const ProjPoint* pts[3] = {&a, &b, &c};
    const auto& order = *cls.relabeling;
    text += " (a=" + affine_str(ctx.chart, *pts[order[0]]) +
            " b=" + affine_str(ctx.chart, *pts[order[1]]) +
            " c=" + affine_str(ctx.chart, *pts[order[2]]) + ")";
    Json labels;
    labels["a"] = json_proj_point(*pts[order[0]]);
    labels["b"] = json_proj_point(*pts[order[1]]);
    labels["c"] = json_proj_point(*pts[order[2]]);
    result["labels"] = std::move(labels);
  } else if (cls.kind == TriangleKind::GoodImproper) {
    text += " (collapsed=" + cls.pattern->str() + ")";
    Json sides = Json::array();
    for (int s = 1; s <= 6; ++s) {
      if (cls.pattern->contains(s)) sides.push_back(s);
    }
    result["collapsed_sides"] = std::move(sides);
  }

  if (ctx.json) {
    Json inputs;
    inputs["points"] = Json::array({json_proj_point(a), json_proj_point(b), json_proj_point(c)});
    ctx.out.emit(envelope("classify", std::move(inputs), std::move(result)));
  } else {
    ctx.out.emit(text + "\n");
  }
  return kExitOk;
}

int cmd_hexagon(const Ctx& ctx, const std::vector<std::string>& point_args) {
  const ProjPoint a = parse_point(point_args[0], ctx.chart);
  const ProjPoint b = parse_point(point_args[1], ctx.chart);
  const ProjPoint c = parse_point(point_args[2], ctx.chart);
  const Hexagon hex = span_hexagon(a, b, c, ctx.chart);

  if (ctx.json) {
    Json inputs;
    inputs["points"] = Json::array({json_proj_point(a), json_proj_point(b), json_proj_point(c)});
    Json result;
    result["labeling"] = Json::array({hex.labeling[0], hex.labeling[1], hex.labeling[2]});
    Json verts = Json::array();
    for (const Vec2& v : hex.vertices) verts.push_back(json_vec2(v));
    result["vertices"] = std::move(verts);
    result["lengths"] = json_lengths(hex.lengths);
    ctx.out.emit(envelope("hexagon", std::move(inputs), std::move(result)));
  } else {
    const ProjPoint* pts[3] = {&a, &b, &c};
    std::string text = "a=" + affine_str(ctx.chart, *pts[hex.labeling[0]]) +
                       " b=" + affine_str(ctx.chart, *pts[hex.labeling[1]]) +
                       " c=" + affine_str(ctx.chart, *pts[hex.labeling[2]]) + "\n";
    text += "vertices=";
    for (size_t i = 0; i < hex.vertices.size(); ++i) {
      if (i) text += " ";
      text += hex.vertices[i].str();
    }
    text += "\nlengths=";
    for (size_t i = 0; i < hex.lengths.size(); ++i) {
      if (i) text += ",";
      text += format_rational(hex.lengths[i]);
    }
    ctx.out.emit(text + "\n");
  }
  return kExitOk;
}

HexLengths lengths_from_values(const std::vector<Rat>& values) {
  if (values.size() == 4) {
    return complete_hexagon_lengths(values[0], values[1], values[2], values[3]);
  }
  if (values.size() == 6) {
    return HexLengths({values[0], values[1], values[2], values[3], values[4], values[5]});
  }
  throw ParseError("expected l1,l2,l3,l5 or all six lengths");
}

int cmd_params(const Ctx& ctx, const std::string& values_arg) {
  const HexLengths lengths = lengths_from_values(parse_rational_list(values_arg));
  if (ctx.json) {
    Json inputs;
    inputs["values"] = values_arg;
    Json result;
    result["lengths"] = json_lengths(lengths.values());
    result["centrally_symmetric"] = lengths.centrally_symmetric();
    ctx.out.emit(envelope("params", std::move(inputs), std::move(result)));
  } else {
    ctx.out.emit(lengths.str() + "\n");
  }
  return kExitOk;
}

int cmd_from_params(const Ctx& ctx, const std::string& values_arg, const std::string& base_arg) {
  const HexLengths lengths = lengths_from_values(parse_rational_list(values_arg));
  const Vec2 base = parse_vec2(base_arg);
  const auto triple = triangle_from_lengths(lengths, base, ctx.chart);
  if (ctx.json) {
    Json inputs;
    inputs["lengths"] = json_lengths(lengths.values());
    inputs["base"] = json_vec2(base);
    Json result;
    result["a"] = json_proj_point(triple[0]);
    result["b"] = json_proj_point(triple[1]);
    result["c"] = json_proj_point(triple[2]);
    ctx.out.emit(envelope("from-params", std::move(inputs), std::move(result)));
  } else {
    ctx.out.emit("a=" + affine_str(ctx.chart, triple[0]) + " b=" +
                 affine_str(ctx.chart, triple[1]) + " c=" + affine_str(ctx.chart, triple[2]) +
                 "\n");
  }
  return kExitOk;
}

int cmd_span(const Ctx& ctx, const std::vector<std::string>& args) {
  const ProjPoint u = parse_point(args[0], ctx.chart);
  std::vector<ProjPoint> generators;
  for (size_t i = 1; i < args.size(); ++i) generators.push_back(parse_point(args[i], ctx.chart));
  const SpanResult r = span_membership(u, generators);
  if (ctx.json) {
    Json inputs;
    inputs["point"] = json_proj_point(u);
    Json gens = Json::array();
    for (const ProjPoint& g : generators) gens.push_back(json_proj_point(g));
    inputs["generators"] = std::move(gens);
    Json result;
    result["member"] = r.member;
    Json witness = nullptr;
    if (r.member) {
      Json coeffs = Json::array();
      for (const Rat& l : r.witness) coeffs.push_back(json_rational(l));
      witness = Json{{"coefficients", std::move(coeffs)}};
    }
    ctx.out.emit(envelope("span", std::move(inputs), std::move(result), std::move(witness)));
  } else {
    if (r.member) {
      std::string text = "true witness=";
      for (size_t i = 0; i < r.witness.size(); ++i) {
        if (i) text += ",";
        text += format_rational(r.witness[i]);
      }
      ctx.out.emit(text + "\n");
    } else {
      ctx.out.emit("false\n");
    }
  }
  return r.member ? kExitOk : kExitFalse;
}

int cmd_independent(const Ctx& ctx, const std::vector<std::string>& args) {
  std::vector<ProjPoint> points;
  for (const std::string& arg : args) points.push_back(parse_point(arg, ctx.chart));
  const bool indep = tropically_independent(points);
  if (ctx.json) {
    Json inputs;
    Json pts = Json::array();
    for (const ProjPoint& p : points) pts.push_back(json_proj_point(p));
    inputs["points"] = std::move(pts);
    Json result;
    result["independent"] = indep;
    ctx.out.emit(envelope("independent", std::move(inputs), std::move(result)));
  } else {
    ctx.out.emit(indep ? "true\n" : "false\n");
  }
  return indep ? kExitOk : kExitFalse;
}

int cmd_improper_types(const Ctx& ctx) {
  const CollapseCatalog catalog = enumerate_collapse_patterns();
  if (ctx.json) {
    Json result;
    Json outcomes = Json::array();
    for (const PatternOutcome& o : catalog.outcomes) {
      Json entry;
      entry["pattern"] = o.pattern.str();
      entry["accepted"] = o.accepted;
      if (o.lengths) entry["lengths"] = json_lengths(*o.lengths);
      if (o.witness) {
        entry["witness"] = Json::array({json_proj_point((*o.witness)[0]),
                                        json_proj_point((*o.witness)[1]),
                                        json_proj_point((*o.witness)[2])});
      }
      entry["note"] = o.note;
      outcomes.push_back(std::move(entry));
    }
    result["outcomes"] = std::move(outcomes);
    Json edges = Json::array();
    for (const auto& [p, q] : catalog.edges) {
      edges.push_back(Json::array({p.str(), q.str()}));
    }
    result["graph_edges"] = std::move(edges);
    result["accepted_count"] = catalog.accepted_count;
    ctx.out.emit(envelope("improper-types", Json::object(), std::move(result)));
  } else {
    std::string text;
    for (const PatternOutcome& o : catalog.outcomes) {
      if (!o.accepted) continue;
      text += o.pattern.str() + " " + o.note;
      if (o.witness) {
        text += " a=" + affine_str(Chart::Z, (*o.witness)[0]) +
                " b=" + affine_str(Chart::Z, (*o.witness)[1]) +
                " c=" + affine_str(Chart::Z, (*o.witness)[2]);
      }
      text += "\n";
    }
    text += "rejected:\n";
    for (const PatternOutcome& o : catalog.outcomes) {
      if (o.accepted) continue;
      text += o.pattern.str() + " " + o.note + "\n";
    }
    text += "graph edges:";
    for (const auto& [p, q] : catalog.edges) text += " " + p.str() + "-" + q.str();
    text += "\naccepted count: " + std::to_string(catalog.accepted_count) + "\n";
    ctx.out.emit(text);
  }
  return kExitOk;
}

int cmd_tile(const Ctx& ctx, const std::string& lengths_arg, const std::string& region_arg) {
  const HexLengths lengths = lengths_from_values(parse_rational_list(lengths_arg));
  const Region region = parse_region(region_arg);
  const Tiling tiling = generate_tiling(lengths, region);
  if (ctx.json) {
    Json inputs;
    inputs["lengths"] = json_lengths(lengths.values());
    inputs["region"] = json_region(region);
    ctx.out.emit(envelope("tile", std::move(inputs), json_tiling(tiling)));
  } else {
    ctx.out.emit("cells=" + std::to_string(tiling.cells.size()) + " u=" + tiling.lattice_u.str() +
                 " v=" + tiling.lattice_v.str() + "\n");
  }
  return kExitOk;
}

int cmd_validate_tile(const Ctx& ctx, const std::string& file_arg) {
  std::string raw;
  if (file_arg == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    raw = buf.str();
  } else {
    std::ifstream f(file_arg, std::ios::binary);
    if (!f) throw ParseError("cannot open tiling file '" + file_arg + "'");
    std::ostringstream buf;
    buf << f.rdbuf();
    raw = buf.str();
  }
  Json doc;
  try {
    doc = Json::parse(raw);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid tiling JSON: ") + e.what());
  }
  const ParsedTiling parsed = tiling_from_json(doc);
  const TilingReport report = validate_tiling(parsed.cells, parsed.region);

  const auto flag = [](bool ok) { return ok ? "ok" : "FAIL"; };
  if (ctx.json) {
    Json inputs;
    inputs["file"] = file_arg;
    Json result;
    result["triangles_transversal"] = report.triangles_transversal;
    result["interiors_disjoint"] = report.interiors_disjoint;
    result["intersections_proper"] = report.intersections_proper;
    result["region_covered"] = report.region_covered;
    result["shared_sides_ok"] = report.shared_sides_ok;
    result["issues"] = report.issues;
    result["all_ok"] = report.all_ok();
    ctx.out.emit(envelope("validate-tile", std::move(inputs), std::move(result)));
  } else {
    std::string text;
    text += std::string("triangles_transversal: ") + flag(report.triangles_transversal) + "\n";
    text += std::string("interiors_disjoint: ") + flag(report.interiors_disjoint) + "\n";
    text += std::string("intersections_proper: ") + flag(report.intersections_proper) + "\n";
    text += std::string("region_covered: ") + flag(report.region_covered) + "\n";
    text += std::string("shared_sides_ok: ") + flag(report.shared_sides_ok) + "\n";
    for (const std::string& issue : report.issues) text += "  " + issue + "\n";
    text += report.all_ok() ? "all checks passed\n" : "validation failed\n";
    ctx.out.emit(text);
  }
  return report.all_ok() ? kExitOk : kExitFalse;
}

int cmd_render(const Ctx& ctx, const std::string& viewport_arg,
               const std::vector<std::string>& items) {
  Scene scene{parse_region(viewport_arg), {}, {}};

  int anonymous = 0;
  const auto next_label = [&](const std::string& stem) {
    return stem + std::to_string(anonymous++);
  };
  int triangles = 0;

  for (const std::string& item : items) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw ParseError("render item needs kind:payload");
    const std::string kind = item.substr(0, colon);
    const std::string payload = item.substr(colon + 1);

    if (kind == "point") {
      scene.elements.push_back(
          PointMark{next_label("p"), interior_chart_coords(ctx.chart, parse_point(payload, ctx.chart))});
    } else if (kind == "line") {
      const TropLine line(parse_point(payload, ctx.chart));
      scene.elements.push_back(
          LineFigure{next_label("L"), line_geometry(line, ctx.chart).vertex});
    } else if (kind == "triangle" || kind == "hexagon") {
      std::vector<std::string> parts;
      size_t start = 0;
      std::string rest = payload;
      while (true) {
        const size_t pos = rest.find(':', start);
        if (pos == std::string::npos) {
          parts.push_back(rest.substr(start));
          break;
        }
        parts.push_back(rest.substr(start, pos - start));
        start = pos + 1;
      }
      if (parts.size() != 3) throw ParseError(kind + " item needs three points");
      const ProjPoint a = parse_point(parts[0], ctx.chart);
      const ProjPoint b = parse_point(parts[1], ctx.chart);
      const ProjPoint c = parse_point(parts[2], ctx.chart);
      const Hexagon hex = span_hexagon(a, b, c, ctx.chart);
      scene.elements.push_back(PolygonFigure{
          next_label("H"), Polygon(hex.vertices.begin(), hex.vertices.end())});
      if (kind == "triangle") {
        const std::string suffix = triangles == 0 ? "" : std::to_string(triangles);
        ++triangles;
        const char* names[3] = {"a", "b", "c"};
        const ProjPoint* pts[3] = {&a, &b, &c};
        const ProjPoint* side_pts[3][2] = {{&a, &b}, {&b, &c}, {&c, &a}};
        const char* side_names[3] = {"ab", "bc", "ca"};
        for (int i = 0; i < 3; ++i) {
          const TropLine side = stable_join(*side_pts[i][0], *side_pts[i][1]);
          scene.elements.push_back(
              LineFigure{side_names[i] + suffix, line_geometry(side, ctx.chart).vertex});
        }
        for (int i = 0; i < 3; ++i) {
          scene.elements.push_back(
              PointMark{names[i] + suffix, interior_chart_coords(ctx.chart, *pts[i])});
        }
      }
    } else if (kind == "tiling") {
      const HexLengths lengths = lengths_from_values(parse_rational_list(payload));
      const Region region = scene.viewport;
      const Tiling tiling = generate_tiling(lengths, region);
      TilingFigure fig{next_label("T"), {}};
      for (const TileCell& cell : tiling.cells) {
        fig.hexagons.emplace_back(cell.hexagon.begin(), cell.hexagon.end());
      }
      scene.elements.push_back(std::move(fig));
    } else {
      throw ParseError("unknown render item kind '" + kind + "'");
    }
  }

  ctx.out.emit(render_svg(scene));
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"Exact max-plus plane geometry kernel"};
  app.require_subcommand(1);

  Ctx ctx;
  std::string chart_arg = "z";
  app.add_option("--chart", chart_arg, "Normalization chart: x, y or z")
      ->capture_default_str();
  app.add_flag("--json", ctx.json, "Structured JSON output");
  app.add_option("--out", ctx.out.out_file, "Write output to a file instead of stdout");

  if (const char* env = std::getenv("TROPIGEO_MAX_N")) {
    try {
      ctx.max_dim = std::stoi(env);
    } catch (const std::exception&) {
      std::cerr << "error: TROPIGEO_MAX_N must be an integer\n";
      return kExitParse;
    }
    if (ctx.max_dim < 1) {
      std::cerr << "error: TROPIGEO_MAX_N must be positive\n";
      return kExitParse;
    }
  }

  std::string det_n, det_matrix;
  auto* det = app.add_subcommand("det", "Tropical determinant (permanent) and regularity");
  det->add_option("n", det_n, "Dimension")->required();
  det->add_option("matrix", det_matrix, "Rows 'a,b;c,d'")->required();

  std::vector<std::string> pair_args(2);
  auto* cross = app.add_subcommand("cross", "Tropical cross product a (x) b");
  cross->add_option("a", pair_args[0])->required();
  cross->add_option("b", pair_args[1])->required();
  auto* join = app.add_subcommand("join", "Stable join of two points");
  join->add_option("a", pair_args[0])->required();
  join->add_option("b", pair_args[1])->required();
  auto* meet = app.add_subcommand("meet", "Stable intersection of two lines");
  meet->add_option("l", pair_args[0])->required();
  meet->add_option("m", pair_args[1])->required();

  std::string incident_point, incident_line;
  auto* inc = app.add_subcommand("incident", "Is the point on the line?");
  inc->add_option("point", incident_point)->required();
  inc->add_option("line", incident_line)->required();

  // CLI11 expands fully bracketed arguments like "[0,0,0]" into container
  // elements, so point triples are taken as individual string positionals.
  std::array<std::string, 3> classify_pts;
  auto* classify = app.add_subcommand("classify", "Classify a triple of points");
  classify->add_option("a", classify_pts[0])->required();
  classify->add_option("b", classify_pts[1])->required();
  classify->add_option("c", classify_pts[2])->required();

  std::array<std::string, 3> hexagon_pts;
  auto* hexagon = app.add_subcommand("hexagon", "Spanned hexagon of a good triple");
  hexagon->add_option("a", hexagon_pts[0])->required();
  hexagon->add_option("b", hexagon_pts[1])->required();
  hexagon->add_option("c", hexagon_pts[2])->required();

  std::string params_values;
  auto* params = app.add_subcommand("params", "Complete or validate hexagon side lengths");
  params->add_option("values", params_values, "l1,l2,l3,l5 or l1..l6")->required();

  std::string fp_values, fp_base;
  auto* from_params = app.add_subcommand("from-params", "Triangle from side lengths and base");
  from_params->add_option("values", fp_values)->required();
  from_params->add_option("base", fp_base, "(x,y)")->required();

  std::array<std::string, 4> span_raw;
  auto* span = app.add_subcommand("span", "Tropical span membership");
  span->add_option("point", span_raw[0])->required();
  span->add_option("g1", span_raw[1])->required();
  span->add_option("g2", span_raw[2])->required();
  span->add_option("g3", span_raw[3]);

  std::array<std::string, 4> indep_raw;
  auto* indep = app.add_subcommand("independent", "Tropical independence of points");
  indep->add_option("p1", indep_raw[0])->required();
  indep->add_option("p2", indep_raw[1])->required();
  indep->add_option("p3", indep_raw[2]);
  indep->add_option("p4", indep_raw[3]);

  auto* improper = app.add_subcommand("improper-types", "Catalog of improper good triangles");

  std::string tile_lengths, tile_region;
  auto* tile = app.add_subcommand("tile", "Tile a region with hexagons");
  tile->add_option("lengths", tile_lengths)->required();
  tile->add_option("region", tile_region, "x_min,x_max,y_min,y_max")->required();

  std::string validate_file;
  auto* validate = app.add_subcommand("validate-tile", "Validate a tiling JSON document");
  validate->add_option("file", validate_file, "Path or - for stdin")->required();

  std::string render_viewport;
  std::vector<std::string> render_items;
  auto* render = app.add_subcommand("render", "Render a scene to SVG");
  render->add_option("--viewport", render_viewport, "x_min,x_max,y_min,y_max")->required();
  render->add_option("items", render_items,
                     "point:P line:L triangle:A:B:C hexagon:A:B:C tiling:LENGTHS")
      ->expected(1, -1);

  // Let --chart/--json/--out appear after the subcommand too.
  for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; })) {
    sub->fallthrough();
  }

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("tropigeo");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return kExitParse;
  }

  try {
    ctx.chart = parse_chart(chart_arg);
    if (det->parsed()) return cmd_det(ctx, det_n, det_matrix);
    if (cross->parsed()) return cmd_point_pair(ctx, "cross", pair_args[0], pair_args[1]);
    if (join->parsed()) return cmd_point_pair(ctx, "join", pair_args[0], pair_args[1]);
    if (meet->parsed()) return cmd_point_pair(ctx, "meet", pair_args[0], pair_args[1]);
    if (inc->parsed()) return cmd_incident(ctx, incident_point, incident_line);
    if (classify->parsed()) {
      return cmd_classify(ctx, {classify_pts[0], classify_pts[1], classify_pts[2]});
    }
    if (hexagon->parsed()) {
      return cmd_hexagon(ctx, {hexagon_pts[0], hexagon_pts[1], hexagon_pts[2]});
    }
    if (params->parsed()) return cmd_params(ctx, params_values);
    if (from_params->parsed()) return cmd_from_params(ctx, fp_values, fp_base);
    if (span->parsed()) {
      std::vector<std::string> span_args(span_raw.begin(), span_raw.end());
      while (!span_args.empty() && span_args.back().empty()) span_args.pop_back();
      return cmd_span(ctx, span_args);
    }
    if (indep->parsed()) {
      std::vector<std::string> indep_args(indep_raw.begin(), indep_raw.end());
      while (!indep_args.empty() && indep_args.back().empty()) indep_args.pop_back();
      return cmd_independent(ctx, indep_args);
    }
    if (improper->parsed()) return cmd_improper_types(ctx);
    if (tile->parsed()) return cmd_tile(ctx, tile_lengths, tile_region);
    if (validate->parsed()) return cmd_validate_tile(ctx, validate_file);
    if (render->parsed()) return cmd_render(ctx, render_viewport, render_items);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  std::cerr << "error: no subcommand\n" << app.help();
  return kExitParse;
}

}  // namespace tropigeo
