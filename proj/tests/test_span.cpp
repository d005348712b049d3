#include "tropigeo/span.hpp"

#include "tropigeo/hexagon.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace tropigeo;

namespace {

ProjPoint pp(int a, int b, int c) {
  return ProjPoint(TropScalar(a), TropScalar(b), TropScalar(c));
}

const std::array<ProjPoint, 3> kTransversal = {pp(-3, -1, 0), pp(0, 0, 0), pp(-1, 2, 0)};

}  // namespace

TEST_CASE("membership with a residuation witness") {
  // -(b@c) = b (+) c for the transversal running example in its labeling
  // a=(-3,-1), b=(-1,2), c=(0,0).
  const ProjPoint b = pp(-1, 2, 0);
  const ProjPoint c = pp(0, 0, 0);
  const ProjPoint side_vertex = cross_product(b, c).negated();
  // On representatives normalized in the same chart, -(b@c) = b (+) c.
  const Vec2 vb = interior_chart_coords(Chart::Z, b);
  const Vec2 vc = interior_chart_coords(Chart::Z, c);
  CHECK(side_vertex == chart_embed(Chart::Z, {TropScalar(std::max(vb.x, vc.x)),
                                              TropScalar(std::max(vb.y, vc.y))}));
  const SpanResult r = span_membership(side_vertex, {b, c});
  CHECK(r.member);
  REQUIRE(r.witness.size() == 2);
  // The witness reproduces the point exactly on canonical representatives.
  std::array<TropScalar, 3> combo;
  for (int i = 0; i < 3; ++i) {
    combo[static_cast<size_t>(i)] =
        trop_add(trop_mul(TropScalar(r.witness[0]), b[i]), trop_mul(TropScalar(r.witness[1]), c[i]));
  }
  CHECK(ProjPoint(combo[0], combo[1], combo[2]) == side_vertex);

  CHECK(span_membership(pp(-1, 0, 0), {kTransversal[0], kTransversal[1], kTransversal[2]}).member);
  CHECK_FALSE(
      span_membership(pp(5, 5, 0), {kTransversal[0], kTransversal[1], kTransversal[2]}).member);
}

TEST_CASE("membership witnesses verify by direct tropical combination") {
  auto rng = testing::make_rng(81);
  for (int iter = 0; iter < 400; ++iter) {
    const ProjPoint u = testing::random_interior_point(rng, -6, 6);
    const std::vector<ProjPoint> gens = {testing::random_interior_point(rng, -6, 6),
                                         testing::random_interior_point(rng, -6, 6),
                                         testing::random_interior_point(rng, -6, 6)};
    const SpanResult r = span_membership(u, gens);
    if (!r.member) continue;
    std::array<TropScalar, 3> combo = {TropScalar::neg_infinity(), TropScalar::neg_infinity(),
                                       TropScalar::neg_infinity()};
    for (size_t j = 0; j < gens.size(); ++j) {
      for (int i = 0; i < 3; ++i) {
        combo[static_cast<size_t>(i)] =
            trop_add(combo[static_cast<size_t>(i)], trop_mul(TropScalar(r.witness[j]), gens[j][i]));
      }
    }
    CHECK(ProjPoint(combo[0], combo[1], combo[2]) == u);
  }
}

TEST_CASE("membership guards its domain") {
  const ProjPoint boundary(TropScalar(0), TropScalar::neg_infinity(), TropScalar(0));
  CHECK_THROWS_AS(span_membership(boundary, {pp(0, 0, 0), pp(1, 0, 0)}), DomainError);
  CHECK_THROWS_AS(span_membership(pp(0, 0, 0), {pp(1, 0, 0)}), DomainError);
}

TEST_CASE("independence of known triples") {
  CHECK(tropically_independent({kTransversal[0], kTransversal[1], kTransversal[2]}));
  CHECK(tropically_independent({pp(0, 0, 0), pp(3, 9, 0), pp(2, 1, 0)}));
  CHECK_FALSE(tropically_independent({pp(-5, 0, 0), pp(0, -7, 0), pp(0, 0, 0)}));
  CHECK(tropically_independent({pp(0, 0, 0), pp(5, 0, 0)}));  // distinct pairs always are
  CHECK_THROWS_AS(tropically_independent({pp(0, 0, 0), pp(0, 0, 0)}), DomainError);
}

TEST_CASE("span of a transversal triple is the solid hexagon") {
  auto rng = testing::make_rng(82);
  for (int iter = 0; iter < 40; ++iter) {
    const auto t = testing::random_distinct_triple(rng, -6, 6);
    if (classify_triangle(t[0], t[1], t[2]).kind != TriangleKind::Transversal) continue;
    const Hexagon hex = span_hexagon(t[0], t[1], t[2]);
    const Polygon poly(hex.vertices.begin(), hex.vertices.end());
    const std::vector<ProjPoint> gens = {t[0], t[1], t[2]};
    for (int s = 0; s < 60; ++s) {
      const Vec2 probe{testing::random_small_rat(rng, -8, 8),
                       testing::random_small_rat(rng, -8, 8)};
      const ProjPoint q = chart_embed(Chart::Z, {TropScalar(probe.x), TropScalar(probe.y)});
      CHECK(span_membership(q, gens).member == point_in_convex_polygon(probe, poly));
    }
    // Hexagon corners and side midpoints are members.
    for (int k = 0; k < 6; ++k) {
      const Vec2& v = hex.vertices[static_cast<size_t>(k)];
      const Vec2& w = hex.vertices[static_cast<size_t>((k + 1) % 6)];
      const Vec2 mid{(v.x + w.x) / 2, (v.y + w.y) / 2};
      CHECK(span_membership(chart_embed(Chart::Z, {TropScalar(v.x), TropScalar(v.y)}), gens).member);
      CHECK(span_membership(chart_embed(Chart::Z, {TropScalar(mid.x), TropScalar(mid.y)}), gens)
                .member);
    }
  }
}

TEST_CASE("two generators span the bent segment through their side vertex") {
  auto rng = testing::make_rng(83);
  int checked = 0;
  for (int iter = 0; iter < 60 && checked < 25; ++iter) {
    const auto t = testing::random_distinct_triple(rng, -6, 6);
    const TriangleClass cls = classify_triangle(t[0], t[1], t[2]);
    if (cls.kind != TriangleKind::Transversal) continue;
    ++checked;
    const auto& order = *cls.relabeling;
    const ProjPoint& b = t[static_cast<size_t>(order[1])];
    const ProjPoint& c = t[static_cast<size_t>(order[2])];
    const Vec2 vb = interior_chart_coords(Chart::Z, b);
    const Vec2 vc = interior_chart_coords(Chart::Z, c);
    const Vec2 corner = interior_chart_coords(Chart::Z, cross_product(b, c).negated());

    for (int s = 0; s <= 4; ++s) {
      const Rat tpar(s, 4);
      // On conv(b, corner) and conv(corner, c): members.
      const Vec2 on1{vb.x + tpar * (corner.x - vb.x), vb.y + tpar * (corner.y - vb.y)};
      const Vec2 on2{corner.x + tpar * (vc.x - corner.x), corner.y + tpar * (vc.y - corner.y)};
      for (const Vec2& v : {on1, on2}) {
        CHECK(span_membership(chart_embed(Chart::Z, {TropScalar(v.x), TropScalar(v.y)}),
                              {b, c})
                  .member);
      }
      // Nudged perpendicular to the segments (horizontal, then vertical
      // piece): not members.
      if (s > 0 && s < 4) {
        const Vec2 off1{on1.x, on1.y + Rat(1, 100)};
        const Vec2 off2{on2.x + Rat(1, 100), on2.y};
        for (const Vec2& v : {off1, off2}) {
          CHECK_FALSE(span_membership(chart_embed(Chart::Z, {TropScalar(v.x), TropScalar(v.y)}),
                                      {b, c})
                          .member);
        }
      }
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("coefficients outside the critical interval collapse to an endpoint") {
  auto rng = testing::make_rng(84);
  int checked = 0;
  for (int iter = 0; iter < 80 && checked < 30; ++iter) {
    const auto t = testing::random_distinct_triple(rng, -6, 6);
    const TriangleClass cls = classify_triangle(t[0], t[1], t[2]);
    if (cls.kind != TriangleKind::Transversal) continue;
    ++checked;
    const auto& order = *cls.relabeling;
    const ProjPoint& b = t[static_cast<size_t>(order[1])];
    const ProjPoint& c = t[static_cast<size_t>(order[2])];
    const Rat lo = b[0].rational() - c[0].rational();
    const Rat hi = b[1].rational() - c[1].rational();
    REQUIRE(lo < hi);
    for (const Rat& mu : {lo - 1, lo - Rat(1, 3), hi + Rat(1, 3), hi + 5}) {
      std::array<TropScalar, 3> combo;
      for (int i = 0; i < 3; ++i) {
        combo[static_cast<size_t>(i)] = trop_add(b[i], trop_mul(TropScalar(mu), c[i]));
      }
      const ProjPoint u(combo[0], combo[1], combo[2]);
      CHECK((u == b || u == c));
    }
  }
  CHECK(checked > 0);
}
