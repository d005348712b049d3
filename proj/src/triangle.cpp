#include "tropigeo/triangle.hpp"

#include "tropigeo/error.hpp"

#include <stdexcept>

namespace tropigeo {

namespace {

constexpr std::array<std::array<int, 3>, 6> kLabelings = {{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
}};

}  // namespace

CollapsePattern::CollapsePattern(std::initializer_list<int> sides) {
  for (int s : sides) add(s);
}

CollapsePattern CollapsePattern::from_mask(unsigned mask) {
  if (mask >= 64) throw DomainError("collapse mask out of range");
  CollapsePattern p;
  p.mask_ = mask;
  return p;
}

void CollapsePattern::add(int side) {
  if (side < 1 || side > 6) throw DomainError("hexagon sides are numbered 1..6");
  mask_ |= 1u << (side - 1);
}

bool CollapsePattern::contains(int side) const {
  return side >= 1 && side <= 6 && (mask_ & (1u << (side - 1)));
}

int CollapsePattern::size() const {
  int n = 0;
  for (int s = 1; s <= 6; ++s) n += contains(s) ? 1 : 0;
  return n;
}

bool CollapsePattern::independent() const {
  for (int s = 1; s <= 6; ++s) {
    const int next = s == 6 ? 1 : s + 1;
    if (contains(s) && contains(next)) return false;
  }
  return true;
}

std::string CollapsePattern::str() const {
  std::string out = "{";
  bool first = true;
  for (int s = 1; s <= 6; ++s) {
    if (!contains(s)) continue;
    if (!first) out += ",";
    out += std::to_string(s);
    first = false;
  }
  return out + "}";
}

std::string_view to_string(TriangleKind kind) {
  switch (kind) {
    case TriangleKind::Transversal:
      return "Transversal";
    case TriangleKind::GoodImproper:
      return "GoodImproper";
    case TriangleKind::NotGood:
      return "NotGood";
    case TriangleKind::Collinear:
      return "Collinear";
    case TriangleKind::DegeneratePair:
      return "DegeneratePair";
  }
  return "?";
}

int labeling_violations(const Vec2& a, const Vec2& b, const Vec2& c) {
  int failed = 0;
  failed += a.x < b.x ? 0 : 1;
  failed += b.x < c.x ? 0 : 1;
  failed += a.y < c.y ? 0 : 1;
  failed += c.y < b.y ? 0 : 1;
  failed += b.x - b.y < a.x - a.y ? 0 : 1;
  failed += a.x - a.y < c.x - c.y ? 0 : 1;
  return failed;
}

bool labeling_weakly_valid(const Vec2& a, const Vec2& b, const Vec2& c) {
  return a.x <= b.x && b.x <= c.x && a.y <= c.y && c.y <= b.y &&
         b.x - b.y <= a.x - a.y && a.x - a.y <= c.x - c.y;
}

std::optional<std::array<int, 3>> transversal_labeling(const std::array<Vec2, 3>& pts) {
  if (pts[0] == pts[1] || pts[1] == pts[2] || pts[0] == pts[2]) {
    throw DomainError("labeling search needs three distinct points");
  }
  for (const auto& order : kLabelings) {
    if (labeling_violations(pts[order[0]], pts[order[1]], pts[order[2]]) == 0) {
      return order;
    }
  }
  return std::nullopt;
}

BestLabeling best_labeling(const std::array<Vec2, 3>& pts) {
  BestLabeling best{kLabelings[0], 7};
  for (const auto& order : kLabelings) {
    const int v = labeling_violations(pts[order[0]], pts[order[1]], pts[order[2]]);
    if (v < best.violations) best = {order, v};
  }
  return best;
}

std::optional<std::array<int, 3>> projective_transversal_labeling(const ProjPoint& a,
                                                                  const ProjPoint& b,
                                                                  const ProjPoint& c) {
  for (const ProjPoint* q : {&a, &b, &c}) {
    if (!q->is_interior()) throw DomainError("labeling search needs interior points");
  }
  const std::array<Vec2, 3> pts = {interior_chart_coords(Chart::Z, a),
                                   interior_chart_coords(Chart::Z, b),
                                   interior_chart_coords(Chart::Z, c)};
  return transversal_labeling(pts);
}

namespace {

void require_distinct_interior(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
  if (!a.is_interior() || !b.is_interior() || !c.is_interior()) {
    throw DomainError("interior points required");
  }
  if (a == b || b == c || a == c) throw DomainError("distinct points required");
}

}  // namespace

bool is_good_triangle(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
  require_distinct_interior(a, b, c);
  if (collinear(a, b, c)) throw DomainError("collinear points do not form a triangle");
  const ProjPoint ab = cross_product(a, b);
  const ProjPoint bc = cross_product(b, c);
  const ProjPoint ca = cross_product(c, a);
  return cross_product(ca, ab) == a && cross_product(ab, bc) == b && cross_product(bc, ca) == c;
}

bool is_proper_triangle(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
  require_distinct_interior(a, b, c);
  const std::array<ProjPoint, 6> six = {a,
                                        cross_product(a, b).negated(),
                                        b,
                                        cross_product(b, c).negated(),
                                        c,
                                        cross_product(c, a).negated()};
  for (size_t i = 0; i < six.size(); ++i)
    for (size_t j = i + 1; j < six.size(); ++j)
      if (six[i] == six[j]) return false;
  return true;
}

bool transversal_by_definition(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
  require_distinct_interior(a, b, c);
  if (!points_transversal(a, b) || !points_transversal(b, c) || !points_transversal(c, a)) {
    return false;
  }
  const ProjPoint ab = cross_product(a, b);
  const ProjPoint bc = cross_product(b, c);
  const ProjPoint ca = cross_product(c, a);
  // Coinciding side lines mean the triple is collinear, not transversal.
  if (ab == bc || bc == ca || ab == ca) return false;
  return points_transversal(ab, bc) && points_transversal(bc, ca) && points_transversal(ca, ab);
}

CollapsePattern collapse_pattern(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
  if (!is_good_triangle(a, b, c)) {
    throw DomainError("collapse pattern requires a good triple");
  }
  const std::array<ProjPoint, 6> ring = {a,
                                         cross_product(a, b).negated(),
                                         b,
                                         cross_product(b, c).negated(),
                                         c,
                                         cross_product(c, a).negated()};
  CollapsePattern pattern;
  for (int side = 1; side <= 6; ++side) {
    if (ring[side - 1] == ring[side % 6]) pattern.add(side);
  }
  return pattern;
}

TriangleClass classify_triangle(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c,
                                Chart chart) {
  if (!a.is_interior() || !b.is_interior() || !c.is_interior() || a == b || b == c || a == c) {
    return {TriangleKind::DegeneratePair, std::nullopt, std::nullopt};
  }
  if (collinear(a, b, c)) {
    return {TriangleKind::Collinear, std::nullopt, std::nullopt};
  }

  const bool good = is_good_triangle(a, b, c);
  const bool proper = is_proper_triangle(a, b, c);
  const bool transversal = good && proper;

  if (transversal_by_definition(a, b, c) != transversal) {
    throw std::logic_error("transversality characterizations disagree");
  }

  if (transversal) {
    const std::array<Vec2, 3> pts = {interior_chart_coords(chart, a),
                                     interior_chart_coords(chart, b),
                                     interior_chart_coords(chart, c)};
    auto order = transversal_labeling(pts);
    if (!order) throw std::logic_error("transversal triple without a strict labeling");
    return {TriangleKind::Transversal, *order, std::nullopt};
  }
  if (good) {
    return {TriangleKind::GoodImproper, std::nullopt, collapse_pattern(a, b, c)};
  }
  return {TriangleKind::NotGood, std::nullopt, std::nullopt};
}

}  // namespace tropigeo
