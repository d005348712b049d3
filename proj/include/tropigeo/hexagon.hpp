#pragma once

#include "tropigeo/geom2d.hpp"
#include "tropigeo/point.hpp"
#include "tropigeo/triangle.hpp"

#include <array>

namespace tropigeo {

// The classical convex hexagon spanned by a good triple, in chart
// coordinates. Vertices run clockwise a, -(a@b), b, -(b@c), c, -(c@a); side j
// joins vertex j to vertex j+1 and has slope inf,1,0,inf,1,0 respectively
// (zero-length sides occur for improper triples). The lattice length of a
// side is its displacement along the primitive direction (0,1), (1,1) or
// (1,0).
struct Hexagon {
  std::array<int, 3> labeling;  // input indices used for (a, b, c)
  std::array<Vec2, 6> vertices;
  std::array<Rat, 6> lengths;
};

// Six positive lattice lengths satisfying the two closure relations
// l1 + l2 = l4 + l5 and l2 + l3 = l5 + l6.
class HexLengths {
 public:
  explicit HexLengths(std::array<Rat, 6> lengths);

  const std::array<Rat, 6>& values() const { return lengths_; }
  const Rat& side(int j) const { return lengths_[static_cast<size_t>(j - 1)]; }

  bool centrally_symmetric() const;  // l1 = l4, l2 = l5, l3 = l6

  // Equality of the projective classes: tuples agreeing after adding one
  // common constant to every length.
  bool same_class(const HexLengths& other) const;

  std::string str() const;  // "1,2,1,2,1,2"

  friend bool operator==(const HexLengths&, const HexLengths&) = default;

 private:
  std::array<Rat, 6> lengths_;
};

// Completes (l1, l2, l3, l5) to the unique full tuple; rejects nonpositive
// inputs and l5 >= min(l1 + l2, l2 + l3).
HexLengths complete_hexagon_lengths(const Rat& l1, const Rat& l2, const Rat& l3, const Rat& l5);

// Clockwise walk from `base`: up l1, diagonally l2, right l3, down l4,
// anti-diagonally l5, left l6. Requires nonnegative lengths obeying the
// closure relations.
std::array<Vec2, 6> hexagon_walk(const std::array<Rat, 6>& lengths, const Vec2& base);

// Hexagon spanned by a good triple. For a transversal triple the labels come
// from the strict-inequality labeling; otherwise from the weakly valid
// labeling with the fewest equalities (ties broken lexicographically).
Hexagon span_hexagon(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c,
                     Chart chart = Chart::Z);

// Vertices a, b, c of the hexagon walked from `base`; always transversal.
std::array<ProjPoint, 3> triangle_from_lengths(const HexLengths& lengths, const Vec2& base,
                                               Chart chart = Chart::Z);

}  // namespace tropigeo
