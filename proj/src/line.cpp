#include "tropigeo/line.hpp"

#include "tropigeo/error.hpp"

namespace tropigeo {

TropLine::TropLine(ProjPoint coeffs) : coeffs_(std::move(coeffs)) {
  if (!coeffs_.is_interior()) {
    throw DomainError("tropical line needs three finite coefficients");
  }
}

bool incident(const ProjPoint& q, const TropLine& line) {
  const ProjPoint& a = line.coeffs();
  TropScalar best = TropScalar::neg_infinity();
  int attained = 0;
  for (int i = 0; i < 3; ++i) {
    const TropScalar term = trop_mul(a[i], q[i]);
    if (term > best) {
      best = term;
      attained = 1;
    } else if (term == best && term.is_finite()) {
      ++attained;
    }
  }
  return best.is_finite() && attained >= 2;
}

TropLine stable_join(const ProjPoint& a, const ProjPoint& b) {
  if (!a.is_interior() || !b.is_interior()) {
    throw DomainError("stable join requires interior points");
  }
  if (a == b) throw DomainError("stable join of equal points is undefined");
  return TropLine(cross_product(a, b));
}

ProjPoint stable_intersection(const TropLine& l, const TropLine& m) {
  if (l == m) throw DomainError("stable intersection of equal lines is undefined");
  return cross_product(l.coeffs(), m.coeffs());
}

bool points_transversal(const ProjPoint& a, const ProjPoint& b) {
  if (!a.is_interior() || !b.is_interior()) {
    throw DomainError("transversality is defined for interior points");
  }
  if (a == b) throw DomainError("transversality needs two distinct points");
  const ProjPoint c = cross_product(a, b);
  return c != a.negated() && c != b.negated();
}

bool lines_transversal(const TropLine& l, const TropLine& m) {
  return points_transversal(l.coeffs(), m.coeffs());
}

bool collinear(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
  if (!a.is_interior() || !b.is_interior() || !c.is_interior()) {
    throw DomainError("collinearity is defined for interior points");
  }
  if (a == b || b == c || a == c) throw DomainError("collinearity needs distinct points");
  TropMatrix m(3, 3);
  const ProjPoint* pts[] = {&a, &b, &c};
  for (int r = 0; r < 3; ++r)
    for (int k = 0; k < 3; ++k) m.at(r, k) = (*pts[r])[k];
  return !trop_det(m).regular;
}

LineGeometry line_geometry(const TropLine& line, Chart chart) {
  const ProjPoint& a = line.coeffs();
  const Rat a1 = a[0].rational(), a2 = a[1].rational(), a3 = a[2].rational();
  const TropScalar ninf = TropScalar::neg_infinity();

  const auto assemble = [&](Vec2 vertex, ProjPoint missing) {
    AffinePoint west{ninf, TropScalar(vertex.y)};
    AffinePoint south{TropScalar(vertex.x), ninf};
    return LineGeometry{std::move(vertex),
                        {{{-1, 0}, {0, -1}, {1, 1}}},
                        std::move(west),
                        std::move(south),
                        std::move(missing)};
  };

  switch (chart) {
    case Chart::Z:
      return assemble({a3 - a1, a3 - a2}, ProjPoint(TropScalar(-a1), TropScalar(-a2), ninf));
    case Chart::Y:
      return assemble({a2 - a1, a2 - a3}, ProjPoint(TropScalar(-a1), ninf, TropScalar(-a3)));
    case Chart::X:
      return assemble({a1 - a2, a1 - a3}, ProjPoint(ninf, TropScalar(-a2), TropScalar(-a3)));
  }
  throw DomainError("invalid chart");
}

}  // namespace tropigeo
