#pragma once

#include "tropigeo/geom2d.hpp"
#include "tropigeo/scalar.hpp"

#include <array>
#include <compare>
#include <optional>
#include <string>

namespace tropigeo {

// Point of the tropical affine plane; both coordinates may be -inf.
struct AffinePoint {
  TropScalar x;
  TropScalar y;

  bool is_interior() const { return x.is_finite() && y.is_finite(); }
  std::string str() const { return "(" + x.str() + "," + y.str() + ")"; }
  friend bool operator==(const AffinePoint&, const AffinePoint&) = default;
};

// The three affine charts of the tropical projective plane, named after the
// coordinate that is pinned to zero.
enum class Chart { X = 1, Y = 2, Z = 3 };

// Point of the tropical projective plane. Stored canonically: the largest
// coordinate is 0 (so projective equality is plain equality); -inf entries
// are preserved as such. At least one coordinate is finite.
class ProjPoint {
 public:
  ProjPoint(TropScalar c1, TropScalar c2, TropScalar c3);

  const TropScalar& operator[](int i) const { return coords_[static_cast<size_t>(i)]; }

  bool is_interior() const;
  ProjPoint negated() const;  // requires an interior point

  std::string str() const;

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.coords_ == b.coords_; }
  friend std::strong_ordering operator<=>(const ProjPoint& a, const ProjPoint& b) {
    return a.coords_ <=> b.coords_;
  }

 private:
  std::array<TropScalar, 3> coords_;
};

// j_1, j_2, j_3: insert 0 into the slot named by the chart.
ProjPoint chart_embed(Chart chart, const AffinePoint& p);

// Normalizes the chart coordinate to zero; absent when that coordinate is
// -inf (the point lies outside the chart).
std::optional<AffinePoint> chart_extract(Chart chart, const ProjPoint& q);

// Chart coordinates of an interior point, as exact rationals.
Vec2 interior_chart_coords(Chart chart, const ProjPoint& q);

// Tropical cross product of interior points: coefficient vector of the
// stable join and stable intersection of the dual lines.
ProjPoint cross_product(const ProjPoint& a, const ProjPoint& b);

}  // namespace tropigeo
