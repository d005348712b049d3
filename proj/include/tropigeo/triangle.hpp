#pragma once

#include "tropigeo/geom2d.hpp"
#include "tropigeo/line.hpp"
#include "tropigeo/point.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace tropigeo {

// Set of hexagon sides of length zero; sides are numbered 1..6, side j joins
// hexagon vertex j to vertex j+1 in the clockwise order
// a, -(a@b), b, -(b@c), c, -(c@a).
class CollapsePattern {
 public:
  CollapsePattern() = default;
  CollapsePattern(std::initializer_list<int> sides);
  static CollapsePattern from_mask(unsigned mask);

  void add(int side);
  bool contains(int side) const;
  unsigned mask() const { return mask_; }
  int size() const;
  bool empty() const { return mask_ == 0; }

  // No two collapsed sides are cyclically adjacent (adjacency around a
  // triangle vertex makes two side lines coincide, adjacency around a side
  // vertex merges two triangle vertices).
  bool independent() const;

  std::string str() const;  // "{1,3,5}"
  friend bool operator==(const CollapsePattern&, const CollapsePattern&) = default;

 private:
  unsigned mask_ = 0;  // bit j-1 holds side j
};

enum class TriangleKind { Transversal, GoodImproper, NotGood, Collinear, DegeneratePair };

std::string_view to_string(TriangleKind kind);

struct TriangleClass {
  TriangleKind kind;
  // Input indices giving the labeling that satisfies the six strict
  // inequalities; present exactly for Transversal.
  std::optional<std::array<int, 3>> relabeling;
  // Zero-length hexagon sides in the labeling as given; present exactly for
  // GoodImproper.
  std::optional<CollapsePattern> pattern;
};

// The six strict inequalities on affine coordinates that cut out the
// transversal cone for a fixed labeling (a, b, c):
//   a1 < b1 < c1,  a2 < c2 < b2,  b1 - b2 < a1 - a2 < c1 - c2.
// Returns how many of them fail (an equality counts as a failure).
int labeling_violations(const Vec2& a, const Vec2& b, const Vec2& c);

// True when all six inequalities hold weakly (no strict reversal).
bool labeling_weakly_valid(const Vec2& a, const Vec2& b, const Vec2& c);

// The unique labeling meeting all six inequalities strictly, if any.
std::optional<std::array<int, 3>> transversal_labeling(const std::array<Vec2, 3>& pts);

struct BestLabeling {
  std::array<int, 3> order;
  int violations;
};

// Labeling with the fewest failed inequalities; ties broken by the
// lexicographically first index permutation.
BestLabeling best_labeling(const std::array<Vec2, 3>& pts);

// Projective counterpart: the six coordinate-difference inequalities searched
// over all labelings. Agrees with the affine search in any chart.
std::optional<std::array<int, 3>> projective_transversal_labeling(const ProjPoint& a,
                                                                  const ProjPoint& b,
                                                                  const ProjPoint& c);

// The three side lines, stably intersected by pairs, give back the vertices.
bool is_good_triangle(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c);

// The vertices and the three side-line vertices are six distinct points.
bool is_proper_triangle(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c);

// Direct transversality: vertices pairwise transversal and side lines
// pairwise transversal.
bool transversal_by_definition(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c);

// Zero-length hexagon sides in the labeling as given (good triples only).
CollapsePattern collapse_pattern(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c);

// Total classification; degeneracies are reported, never thrown.
TriangleClass classify_triangle(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c,
                                Chart chart = Chart::Z);

}  // namespace tropigeo
