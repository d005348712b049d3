#include "tropigeo/point.hpp"

#include "test_support.hpp"

#include <doctest.h>

using namespace tropigeo;

namespace {

ProjPoint pp(int a, int b, int c) {
  return ProjPoint(TropScalar(a), TropScalar(b), TropScalar(c));
}

}  // namespace

TEST_CASE("canonical form puts the maximum at zero") {
  const ProjPoint p = pp(1, 0, 1);
  CHECK(p[0] == TropScalar(0));
  CHECK(p[1] == TropScalar(-1));
  CHECK(p[2] == TropScalar(0));
  CHECK(p.str() == "[0,-1,0]");

  // Equivalent representatives collapse to the same triple.
  CHECK(pp(1, 0, 1) == pp(4, 3, 4));
  CHECK(pp(0, 0, 0) != pp(1, 0, 0));

  const ProjPoint q(TropScalar(-2), TropScalar::neg_infinity(), TropScalar(-5));
  CHECK(q[0] == TropScalar(0));
  CHECK_FALSE(q[1].is_finite());
  CHECK(q[2] == TropScalar(-3));
}

TEST_CASE("the all -inf triple is rejected") {
  const TropScalar ninf = TropScalar::neg_infinity();
  CHECK_THROWS_AS(ProjPoint(ninf, ninf, ninf), DomainError);
}

TEST_CASE("interior points have no -inf coordinate") {
  CHECK(pp(-1, 1, 0).is_interior());
  const ProjPoint boundary(TropScalar(-2), TropScalar::neg_infinity(), TropScalar(-5));
  CHECK_FALSE(boundary.is_interior());
  const ProjPoint p2 = chart_embed(Chart::Z, {TropScalar::neg_infinity(),
                                              TropScalar::neg_infinity()});
  CHECK_FALSE(p2.is_interior());
}

TEST_CASE("chart embeddings insert zero at the chart slot") {
  const AffinePoint xy{TropScalar(7), TropScalar(-2)};
  CHECK(chart_embed(Chart::Z, xy) == pp(7, -2, 0));
  CHECK(chart_embed(Chart::Y, xy) == pp(7, 0, -2));
  CHECK(chart_embed(Chart::X, xy) == pp(0, 7, -2));
}

TEST_CASE("chart extraction is undefined outside the chart") {
  const ProjPoint missing(TropScalar(-1), TropScalar(0), TropScalar::neg_infinity());
  CHECK_FALSE(chart_extract(Chart::Z, missing).has_value());
  const auto back = chart_extract(Chart::Y, missing);
  REQUIRE(back.has_value());
  CHECK(back->x == TropScalar(-1));
  CHECK_FALSE(back->y.is_finite());
}

TEST_CASE("chart round trip on random affine points") {
  auto rng = testing::make_rng(23);
  for (int iter = 0; iter < 200; ++iter) {
    const AffinePoint p{TropScalar(testing::random_small_rat(rng, -9, 9)),
                        TropScalar(testing::random_small_rat(rng, -9, 9))};
    for (Chart chart : {Chart::X, Chart::Y, Chart::Z}) {
      const auto q = chart_extract(chart, chart_embed(chart, p));
      REQUIRE(q.has_value());
      CHECK(*q == p);
    }
  }
}

TEST_CASE("cross product of known pairs") {
  CHECK(cross_product(pp(-1, 1, 0), pp(0, 0, 0)) == pp(1, 0, 1));
  CHECK(cross_product(pp(0, 0, 0), pp(-1, 2, 0)) == pp(2, 0, 2));
  CHECK(cross_product(pp(-1, 1, 0), pp(-1, 1, 0)) == pp(-1, 1, 0).negated());
}

TEST_CASE("cross product is symmetric and self-product negates") {
  auto rng = testing::make_rng(24);
  for (int iter = 0; iter < 500; ++iter) {
    const ProjPoint a = testing::random_interior_point(rng, -10, 10);
    const ProjPoint b = testing::random_interior_point(rng, -10, 10);
    CHECK(cross_product(a, b) == cross_product(b, a));
    CHECK(cross_product(a, a) == a.negated());
  }
}

TEST_CASE("cross product rejects boundary points") {
  const ProjPoint boundary(TropScalar(0), TropScalar::neg_infinity(), TropScalar(0));
  CHECK_THROWS_AS(cross_product(boundary, pp(0, 0, 0)), DomainError);
}
