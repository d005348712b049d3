#include "tropigeo/hexagon.hpp"

#include "tropigeo/error.hpp"

#include <stdexcept>

namespace tropigeo {

namespace {

constexpr std::array<std::array<int, 3>, 6> kLabelings = {{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
}};

void check_closure(const std::array<Rat, 6>& l) {
  if (l[0] + l[1] != l[3] + l[4] || l[1] + l[2] != l[4] + l[5]) {
    throw DomainError("hexagon side lengths violate the closure relations");
  }
}

}  // namespace

HexLengths::HexLengths(std::array<Rat, 6> lengths) : lengths_(std::move(lengths)) {
  for (const Rat& l : lengths_) {
    if (l <= 0) throw DomainError("hexagon side lengths must be positive");
  }
  check_closure(lengths_);
}

bool HexLengths::centrally_symmetric() const {
  return lengths_[0] == lengths_[3] && lengths_[1] == lengths_[4] && lengths_[2] == lengths_[5];
}

bool HexLengths::same_class(const HexLengths& other) const {
  const Rat shift = other.lengths_[0] - lengths_[0];
  for (int i = 0; i < 6; ++i) {
    if (lengths_[static_cast<size_t>(i)] + shift != other.lengths_[static_cast<size_t>(i)]) {
      return false;
    }
  }
  return true;
}

std::string HexLengths::str() const {
  std::string out;
  for (int i = 0; i < 6; ++i) {
    if (i) out += ",";
    out += format_rational(lengths_[static_cast<size_t>(i)]);
  }
  return out;
}

HexLengths complete_hexagon_lengths(const Rat& l1, const Rat& l2, const Rat& l3, const Rat& l5) {
  for (const Rat* l : {&l1, &l2, &l3, &l5}) {
    if (*l <= 0) throw DomainError("hexagon side lengths must be positive");
  }
  const Rat bound = std::min(l1 + l2, l2 + l3);
  if (l5 >= bound) {
    throw DomainError("l5 must be smaller than min(l1+l2, l2+l3)");
  }
  return HexLengths({l1, l2, l3, l1 + l2 - l5, l5, l2 + l3 - l5});
}

std::array<Vec2, 6> hexagon_walk(const std::array<Rat, 6>& lengths, const Vec2& base) {
  for (const Rat& l : lengths) {
    if (l < 0) throw DomainError("hexagon side lengths must be nonnegative");
  }
  check_closure(lengths);
  std::array<Vec2, 6> v;
  v[0] = base;
  v[1] = v[0] + Vec2{Rat(0), lengths[0]};
  v[2] = v[1] + Vec2{lengths[1], lengths[1]};
  v[3] = v[2] + Vec2{lengths[2], Rat(0)};
  v[4] = v[3] - Vec2{Rat(0), lengths[3]};
  v[5] = v[4] - Vec2{lengths[4], lengths[4]};
  return v;
}

namespace {

// Reads the lattice length of side j off the vertex ring, checking the
// clockwise slope template on the way.
Rat side_length(const std::array<Vec2, 6>& ring, int side) {
  const Vec2 d = ring[static_cast<size_t>(side % 6)] - ring[static_cast<size_t>(side - 1)];
  if (d.x == 0 && d.y == 0) return 0;
  bool ok = false;
  Rat len;
  switch (side) {
    case 1:  // north
      ok = d.x == 0 && d.y > 0;
      len = d.y;
      break;
    case 2:  // north-east
      ok = d.x == d.y && d.x > 0;
      len = d.x;
      break;
    case 3:  // east
      ok = d.y == 0 && d.x > 0;
      len = d.x;
      break;
    case 4:  // south
      ok = d.x == 0 && d.y < 0;
      len = -d.y;
      break;
    case 5:  // south-west
      ok = d.x == d.y && d.x < 0;
      len = -d.x;
      break;
    case 6:  // west
      ok = d.y == 0 && d.x < 0;
      len = -d.x;
      break;
    default:
      break;
  }
  if (!ok) throw std::logic_error("hexagon side leaves the slope template");
  return len;
}

}  // namespace

Hexagon span_hexagon(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c, Chart chart) {
  const TriangleClass cls = classify_triangle(a, b, c, chart);
  if (cls.kind != TriangleKind::Transversal && cls.kind != TriangleKind::GoodImproper) {
    throw DomainError("span hexagon requires a good triple, got " +
                      std::string(to_string(cls.kind)));
  }

  const std::array<const ProjPoint*, 3> input = {&a, &b, &c};
  const std::array<Vec2, 3> coords = {interior_chart_coords(chart, a),
                                      interior_chart_coords(chart, b),
                                      interior_chart_coords(chart, c)};

  // Pick the labeling whose inequalities all hold weakly, preferring the
  // fewest equalities. Transversal triples have exactly one such labeling
  // and it is strict.
  std::array<int, 3> labels{};
  int best = 7;
  bool found = false;
  for (const auto& order : kLabelings) {
    const Vec2& la = coords[static_cast<size_t>(order[0])];
    const Vec2& lb = coords[static_cast<size_t>(order[1])];
    const Vec2& lc = coords[static_cast<size_t>(order[2])];
    if (!labeling_weakly_valid(la, lb, lc)) continue;
    const int equalities = labeling_violations(la, lb, lc);
    if (equalities < best) {
      best = equalities;
      labels = order;
      found = true;
    }
  }
  if (!found) throw std::logic_error("good triple without a weakly valid labeling");

  const ProjPoint& pa = *input[static_cast<size_t>(labels[0])];
  const ProjPoint& pb = *input[static_cast<size_t>(labels[1])];
  const ProjPoint& pc = *input[static_cast<size_t>(labels[2])];

  Hexagon hex;
  hex.labeling = labels;
  const std::array<ProjPoint, 6> ring = {pa,
                                         cross_product(pa, pb).negated(),
                                         pb,
                                         cross_product(pb, pc).negated(),
                                         pc,
                                         cross_product(pc, pa).negated()};
  for (int i = 0; i < 6; ++i) {
    hex.vertices[static_cast<size_t>(i)] = interior_chart_coords(chart, ring[static_cast<size_t>(i)]);
  }
  for (int side = 1; side <= 6; ++side) {
    hex.lengths[static_cast<size_t>(side - 1)] = side_length(hex.vertices, side);
  }
  if (hex.lengths[0] + hex.lengths[1] != hex.lengths[3] + hex.lengths[4] ||
      hex.lengths[1] + hex.lengths[2] != hex.lengths[4] + hex.lengths[5] ||
      hex.lengths[2] + hex.lengths[3] != hex.lengths[5] + hex.lengths[0]) {
    throw std::logic_error("hexagon closure relations inconsistent");
  }
  return hex;
}

std::array<ProjPoint, 3> triangle_from_lengths(const HexLengths& lengths, const Vec2& base,
                                               Chart chart) {
  const std::array<Vec2, 6> walk = hexagon_walk(lengths.values(), base);
  const auto to_proj = [&](const Vec2& v) {
    return chart_embed(chart, {TropScalar(v.x), TropScalar(v.y)});
  };
  return {to_proj(walk[0]), to_proj(walk[2]), to_proj(walk[4])};
}

}  // namespace tropigeo
