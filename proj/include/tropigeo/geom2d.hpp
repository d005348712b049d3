#pragma once

#include "tropigeo/rational.hpp"

#include <string>
#include <vector>

namespace tropigeo {

// Exact rational point/vector of the classical plane.
struct Vec2 {
  Rat x;
  Rat y;

  friend bool operator==(const Vec2&, const Vec2&) = default;
  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }

  std::string str() const { return "(" + format_rational(x) + "," + format_rational(y) + ")"; }
};

inline Rat cross(const Vec2& u, const Vec2& v) { return u.x * v.y - u.y * v.x; }

// Sign of the turn a->b->c: +1 left, -1 right, 0 collinear.
int orientation(const Vec2& a, const Vec2& b, const Vec2& c);

using Polygon = std::vector<Vec2>;

// Shoelace sum / 2; positive for counterclockwise rings.
Rat polygon_area_signed(const Polygon& poly);
Rat polygon_area(const Polygon& poly);

Polygon oriented_ccw(Polygon poly);

// Drops consecutive duplicate vertices (wrapping around).
Polygon dedupe_ring(const Polygon& poly);

// Closed-region test for a convex polygon in either orientation.
bool point_in_convex_polygon(const Vec2& p, const Polygon& poly);

// Intersection of two convex polygons via half-plane clipping. The result may
// be empty or degenerate (all vertices on one segment or point).
Polygon convex_intersection(const Polygon& subject, const Polygon& convex_clip);

// Axis-aligned rational rectangle.
class Region {
 public:
  Region(Rat x_min, Rat x_max, Rat y_min, Rat y_max);

  const Rat& x_min() const { return x_min_; }
  const Rat& x_max() const { return x_max_; }
  const Rat& y_min() const { return y_min_; }
  const Rat& y_max() const { return y_max_; }

  Rat width() const { return x_max_ - x_min_; }
  Rat height() const { return y_max_ - y_min_; }
  Rat area() const { return width() * height(); }
  Polygon polygon() const;  // counterclockwise

 private:
  Rat x_min_, x_max_, y_min_, y_max_;
};

}  // namespace tropigeo
