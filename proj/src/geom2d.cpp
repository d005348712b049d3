#include "tropigeo/geom2d.hpp"

#include "tropigeo/error.hpp"

#include <algorithm>

namespace tropigeo {

int orientation(const Vec2& a, const Vec2& b, const Vec2& c) {
  const Rat z = cross(b - a, c - a);
  if (z > 0) return 1;
  if (z < 0) return -1;
  return 0;
}

Rat polygon_area_signed(const Polygon& poly) {
  Rat sum = 0;
  const size_t n = poly.size();
  for (size_t i = 0; i < n; ++i) {
    const Vec2& p = poly[i];
    const Vec2& q = poly[(i + 1) % n];
    sum += p.x * q.y - q.x * p.y;
  }
  return sum / 2;
}

Rat polygon_area(const Polygon& poly) {
  Rat a = polygon_area_signed(poly);
  return a < 0 ? Rat(-a) : a;
}

Polygon oriented_ccw(Polygon poly) {
  if (polygon_area_signed(poly) < 0) std::reverse(poly.begin(), poly.end());
  return poly;
}

Polygon dedupe_ring(const Polygon& poly) {
  Polygon out;
  for (const Vec2& v : poly) {
    if (out.empty() || !(out.back() == v)) out.push_back(v);
  }
  while (out.size() > 1 && out.front() == out.back()) out.pop_back();
  return out;
}

bool point_in_convex_polygon(const Vec2& p, const Polygon& poly) {
  const Polygon ring = dedupe_ring(oriented_ccw(poly));
  if (ring.empty()) return false;
  if (ring.size() == 1) return p == ring.front();
  const size_t n = ring.size();
  for (size_t i = 0; i < n; ++i) {
    if (orientation(ring[i], ring[(i + 1) % n], p) < 0) return false;
  }
  return true;
}

namespace {

// Keeps the closed half plane on the left of a->b.
Polygon clip_half_plane(const Polygon& poly, const Vec2& a, const Vec2& b) {
  Polygon out;
  const size_t n = poly.size();
  const Vec2 dir = b - a;
  for (size_t i = 0; i < n; ++i) {
    const Vec2& cur = poly[i];
    const Vec2& nxt = poly[(i + 1) % n];
    const Rat side_cur = cross(dir, cur - a);
    const Rat side_nxt = cross(dir, nxt - a);
    if (side_cur >= 0) out.push_back(cur);
    if ((side_cur > 0 && side_nxt < 0) || (side_cur < 0 && side_nxt > 0)) {
      const Rat t = side_cur / (side_cur - side_nxt);
      out.push_back({cur.x + t * (nxt.x - cur.x), cur.y + t * (nxt.y - cur.y)});
    }
  }
  return out;
}

}  // namespace

Polygon convex_intersection(const Polygon& subject, const Polygon& convex_clip) {
  Polygon clip = dedupe_ring(oriented_ccw(convex_clip));
  Polygon result = dedupe_ring(oriented_ccw(subject));
  if (clip.size() < 3 || result.empty()) return {};
  const size_t n = clip.size();
  for (size_t i = 0; i < n && !result.empty(); ++i) {
    result = clip_half_plane(result, clip[i], clip[(i + 1) % n]);
  }
  return dedupe_ring(result);
}

Region::Region(Rat x_min, Rat x_max, Rat y_min, Rat y_max)
    : x_min_(std::move(x_min)),
      x_max_(std::move(x_max)),
      y_min_(std::move(y_min)),
      y_max_(std::move(y_max)) {
  if (x_min_ >= x_max_ || y_min_ >= y_max_) throw DomainError("empty region");
}

Polygon Region::polygon() const {
  return {{x_min_, y_min_}, {x_max_, y_min_}, {x_max_, y_max_}, {x_min_, y_max_}};
}

}  // namespace tropigeo
