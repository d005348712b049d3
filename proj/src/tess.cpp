#include "tropigeo/tess.hpp"

#include "tropigeo/error.hpp"
#include "tropigeo/triangle.hpp"

#include <algorithm>

namespace tropigeo {

namespace {

BigInt floor_rat(const Rat& r) {
  BigInt q = numerator(r) / denominator(r);
  if (numerator(r) % denominator(r) != 0 && r < 0) --q;
  return q;
}

BigInt ceil_rat(const Rat& r) { return -floor_rat(-r); }

Vec2 scaled(const Vec2& v, long k) { return {v.x * k, v.y * k}; }

}  // namespace

Tiling generate_tiling(const HexLengths& lengths, const Region& region) {
  if (!lengths.centrally_symmetric()) {
    throw DomainError("translation tilings need centrally symmetric lengths (l1=l4, l2=l5, l3=l6)");
  }

  const Vec2 base{region.x_min(), region.y_min()};
  const std::array<Vec2, 6> walk = hexagon_walk(lengths.values(), base);
  const Vec2 u = walk[4] - walk[0];  // c - a
  const Vec2 v = walk[2] - walk[0];  // b - a
  const Rat det = cross(u, v);
  if (det == 0) throw DomainError("degenerate lattice");

  // Hexagon bounding box relative to its anchor.
  const Rat hex_w = lengths.side(2) + lengths.side(3);
  const Rat hex_h = lengths.side(1) + lengths.side(2);

  Tiling tiling{lengths, base, u, v, region, {}};

  // Anchor offsets that can possibly touch the region, via the inverse
  // lattice transform of the padded region corners.
  const Rat xs[2] = {region.x_min() - base.x - hex_w, region.x_max() - base.x};
  const Rat ys[2] = {region.y_min() - base.y - hex_h, region.y_max() - base.y};
  BigInt i_lo, i_hi, j_lo, j_hi;
  bool first = true;
  for (const Rat& x : xs) {
    for (const Rat& y : ys) {
      // Solve i*u + j*v = (x, y) exactly.
      const Rat i = (x * v.y - y * v.x) / det;
      const Rat j = (y * u.x - x * u.y) / det;
      if (first) {
        i_lo = floor_rat(i);
        i_hi = ceil_rat(i);
        j_lo = floor_rat(j);
        j_hi = ceil_rat(j);
        first = false;
      } else {
        i_lo = std::min(i_lo, floor_rat(i));
        i_hi = std::max(i_hi, ceil_rat(i));
        j_lo = std::min(j_lo, floor_rat(j));
        j_hi = std::max(j_hi, ceil_rat(j));
      }
    }
  }

  const Polygon region_poly = region.polygon();
  for (BigInt bi = i_lo; bi <= i_hi; ++bi) {
    for (BigInt bj = j_lo; bj <= j_hi; ++bj) {
      const long i = bi.convert_to<long>();
      const long j = bj.convert_to<long>();
      const Vec2 offset = scaled(u, i) + scaled(v, j);
      TileCell cell;
      cell.index_u = i;
      cell.index_v = j;
      for (int k = 0; k < 6; ++k) cell.hexagon[static_cast<size_t>(k)] = walk[static_cast<size_t>(k)] + offset;
      cell.triangle = {walk[0] + offset, walk[2] + offset, walk[4] + offset};
      const Polygon clipped =
          convex_intersection({cell.hexagon.begin(), cell.hexagon.end()}, region_poly);
      if (clipped.size() >= 3 && polygon_area(clipped) > 0) {
        tiling.cells.push_back(std::move(cell));
      }
    }
  }
  return tiling;
}

namespace {

// Matches a segment against the full sides of a hexagon (zero-length sides
// are skipped).
bool is_full_side(const std::array<Vec2, 6>& hexagon, const Vec2& p, const Vec2& q) {
  for (int k = 0; k < 6; ++k) {
    const Vec2& s = hexagon[static_cast<size_t>(k)];
    const Vec2& t = hexagon[static_cast<size_t>((k + 1) % 6)];
    if (s == t) continue;
    if ((s == p && t == q) || (s == q && t == p)) return true;
  }
  return false;
}

}  // namespace

TilingReport validate_tiling(const std::vector<TileCell>& cells, const Region& region) {
  if (cells.empty()) throw DomainError("tiling validation needs at least one cell");
  TilingReport report;

  // (i) every recovered triangle is transversal.
  report.triangles_transversal = true;
  for (size_t n = 0; n < cells.size(); ++n) {
    const auto& t = cells[n].triangle;
    const auto embed = [](const Vec2& w) {
      return chart_embed(Chart::Z, {TropScalar(w.x), TropScalar(w.y)});
    };
    const TriangleClass cls = classify_triangle(embed(t[0]), embed(t[1]), embed(t[2]));
    if (cls.kind != TriangleKind::Transversal) {
      report.triangles_transversal = false;
      report.issues.push_back("cell " + std::to_string(n) + ": triangle classifies as " +
                              std::string(to_string(cls.kind)));
    }
  }

  // (ii) + (iii) pairwise intersections.
  report.interiors_disjoint = true;
  report.intersections_proper = true;
  report.shared_sides_ok = true;
  for (size_t m = 0; m < cells.size(); ++m) {
    const Polygon hm(cells[m].hexagon.begin(), cells[m].hexagon.end());
    for (size_t n = m + 1; n < cells.size(); ++n) {
      const Polygon hn(cells[n].hexagon.begin(), cells[n].hexagon.end());
      const Polygon meet = convex_intersection(hm, hn);
      if (meet.empty()) continue;
      if (polygon_area(meet) > 0) {
        report.interiors_disjoint = false;
        report.issues.push_back("cells " + std::to_string(m) + "," + std::to_string(n) +
                                ": interiors overlap");
        continue;
      }
      if (meet.size() == 1) continue;  // single shared point
      // Degenerate overlap: must be exactly one full common side.
      const auto [lo, hi] = std::minmax_element(
          meet.begin(), meet.end(), [](const Vec2& a, const Vec2& b) {
            return a.x < b.x || (a.x == b.x && a.y < b.y);
          });
      const Vec2 p = *lo, q = *hi;
      if (!is_full_side(cells[m].hexagon, p, q) || !is_full_side(cells[n].hexagon, p, q)) {
        report.intersections_proper = false;
        report.issues.push_back("cells " + std::to_string(m) + "," + std::to_string(n) +
                                ": shared segment is not a full side of both hexagons");
        continue;
      }
      // (v) exactly one endpoint is a vertex of both triangles.
      int common = 0;
      for (const Vec2& e : {p, q}) {
        const auto& tm = cells[m].triangle;
        const auto& tn = cells[n].triangle;
        const bool in_m = std::find(tm.begin(), tm.end(), e) != tm.end();
        const bool in_n = std::find(tn.begin(), tn.end(), e) != tn.end();
        if (in_m && in_n) ++common;
      }
      if (common != 1) {
        report.shared_sides_ok = false;
        report.issues.push_back("cells " + std::to_string(m) + "," + std::to_string(n) +
                                ": shared side has " + std::to_string(common) +
                                " common triangle vertices, expected 1");
      }
    }
  }

  // (iv) exact area bookkeeping of the clipped cells.
  const Polygon region_poly = region.polygon();
  Rat covered = 0;
  for (const TileCell& cell : cells) {
    const Polygon clipped =
        convex_intersection({cell.hexagon.begin(), cell.hexagon.end()}, region_poly);
    if (clipped.size() >= 3) covered += polygon_area(clipped);
  }
  report.region_covered = covered == region.area();
  if (!report.region_covered) {
    report.issues.push_back("clipped areas sum to " + format_rational(covered) + ", region has " +
                            format_rational(region.area()));
  }
  return report;
}

}  // namespace tropigeo
