#pragma once

#include "tropigeo/geom2d.hpp"
#include "tropigeo/matrix.hpp"
#include "tropigeo/point.hpp"

#include <array>

namespace tropigeo {

// Tropical line in the projective plane, identified by its dual coefficient
// vector; all three coefficients are finite.
class TropLine {
 public:
  explicit TropLine(ProjPoint coeffs);

  const ProjPoint& coeffs() const { return coeffs_; }

  std::string str() const { return coeffs_.str(); }
  friend bool operator==(const TropLine& l, const TropLine& m) { return l.coeffs_ == m.coeffs_; }

 private:
  ProjPoint coeffs_;
};

// Maximum of the three pairings attained at least twice with a finite value.
bool incident(const ProjPoint& q, const TropLine& line);

// Line through two distinct interior points, stable under perturbation.
TropLine stable_join(const ProjPoint& a, const ProjPoint& b);

// Stable meeting point of two distinct lines.
ProjPoint stable_intersection(const TropLine& l, const TropLine& m);

// Exactly one tropical line passes through the pair.
bool points_transversal(const ProjPoint& a, const ProjPoint& b);

// The two lines meet in a single point (dual of the point predicate).
bool lines_transversal(const TropLine& l, const TropLine& m);

// Some tropical line passes through all three points; decided by tropical
// singularity of the coordinate matrix.
bool collinear(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c);

// A line in a chart: three rays leaving the vertex West, South, North-East.
struct LineGeometry {
  Vec2 vertex;
  std::array<std::pair<int, int>, 3> ray_directions;  // W, S, NE
  AffinePoint boundary_west;                          // (-inf, vertex.y)
  AffinePoint boundary_south;                         // (vertex.x, -inf)
  ProjPoint missing_point;  // the one point of the projective line outside the chart
};

LineGeometry line_geometry(const TropLine& line, Chart chart);

}  // namespace tropigeo
