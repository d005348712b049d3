#pragma once

#include "tropigeo/geom2d.hpp"
#include "tropigeo/hexagon.hpp"

#include <string>
#include <vector>

namespace tropigeo {

// One placed hexagon with the triangle it spans, at lattice translate
// i*u + j*v of the base cell.
struct TileCell {
  long index_u = 0;
  long index_v = 0;
  std::array<Vec2, 6> hexagon;
  std::array<Vec2, 3> triangle;  // vertices a, c ... walk corners 1, 3, 5
};

struct Tiling {
  HexLengths lengths;
  Vec2 base;
  Vec2 lattice_u;  // c - a of the base cell
  Vec2 lattice_v;  // b - a of the base cell
  Region region;
  std::vector<TileCell> cells;
};

// Translation tiling of the region by the hexagon of a centrally symmetric
// length tuple (l1=l4, l2=l5, l3=l6), anchored at the region's lower-left
// corner. Emits every translate whose hexagon meets the region with positive
// area.
Tiling generate_tiling(const HexLengths& lengths, const Region& region);

struct TilingReport {
  bool triangles_transversal = false;
  bool interiors_disjoint = false;
  bool intersections_proper = false;  // pairwise meet: empty, point, or one full side
  bool region_covered = false;        // clipped areas sum to the region area
  bool shared_sides_ok = false;       // one shared triangle vertex per shared side
  std::vector<std::string> issues;

  bool all_ok() const {
    return triangles_transversal && interiors_disjoint && intersections_proper &&
           region_covered && shared_sides_ok;
  }
};

// Exact validation of an arbitrary cell family against a region.
TilingReport validate_tiling(const std::vector<TileCell>& cells, const Region& region);

}  // namespace tropigeo
