#include "tropigeo/point.hpp"

#include "tropigeo/error.hpp"

namespace tropigeo {

namespace {

int slot_of(Chart chart) { return static_cast<int>(chart) - 1; }

}  // namespace

ProjPoint::ProjPoint(TropScalar c1, TropScalar c2, TropScalar c3)
    : coords_{std::move(c1), std::move(c2), std::move(c3)} {
  TropScalar max = coords_[0];
  max = trop_add(max, coords_[1]);
  max = trop_add(max, coords_[2]);
  if (!max.is_finite()) {
    throw DomainError("projective point needs at least one finite coordinate");
  }
  const Rat shift = -max.rational();
  for (TropScalar& c : coords_) c = c.shifted(shift);
}

bool ProjPoint::is_interior() const {
  return coords_[0].is_finite() && coords_[1].is_finite() && coords_[2].is_finite();
}

ProjPoint ProjPoint::negated() const {
  if (!is_interior()) throw DomainError("cannot negate a boundary point");
  return ProjPoint(coords_[0].negated(), coords_[1].negated(), coords_[2].negated());
}

std::string ProjPoint::str() const {
  return "[" + coords_[0].str() + "," + coords_[1].str() + "," + coords_[2].str() + "]";
}

ProjPoint chart_embed(Chart chart, const AffinePoint& p) {
  switch (chart) {
    case Chart::X:
      return ProjPoint(TropScalar(0), p.x, p.y);
    case Chart::Y:
      return ProjPoint(p.x, TropScalar(0), p.y);
    case Chart::Z:
      return ProjPoint(p.x, p.y, TropScalar(0));
  }
  throw DomainError("invalid chart");
}

std::optional<AffinePoint> chart_extract(Chart chart, const ProjPoint& q) {
  const int k = slot_of(chart);
  if (!q[k].is_finite()) return std::nullopt;
  const Rat shift = -q[k].rational();
  AffinePoint p;
  switch (chart) {
    case Chart::X:
      p = {q[1].shifted(shift), q[2].shifted(shift)};
      break;
    case Chart::Y:
      p = {q[0].shifted(shift), q[2].shifted(shift)};
      break;
    case Chart::Z:
      p = {q[0].shifted(shift), q[1].shifted(shift)};
      break;
  }
  return p;
}

Vec2 interior_chart_coords(Chart chart, const ProjPoint& q) {
  if (!q.is_interior()) throw DomainError("interior point required");
  const AffinePoint p = *chart_extract(chart, q);
  return {p.x.rational(), p.y.rational()};
}

ProjPoint cross_product(const ProjPoint& a, const ProjPoint& b) {
  if (!a.is_interior() || !b.is_interior()) {
    throw DomainError("cross product requires interior points");
  }
  const Rat a1 = a[0].rational(), a2 = a[1].rational(), a3 = a[2].rational();
  const Rat b1 = b[0].rational(), b2 = b[1].rational(), b3 = b[2].rational();
  return ProjPoint(TropScalar(std::max(a2 + b3, b2 + a3)),
                   TropScalar(std::max(a1 + b3, b1 + a3)),
                   TropScalar(std::max(a1 + b2, b1 + a2)));
}

}  // namespace tropigeo
