// Acceptance suite: one pass/fail line per criterion, exact arithmetic
// throughout, zero tolerances. Exits nonzero if any criterion fails.

#include "tropigeo/collapse_catalog.hpp"
#include "tropigeo/hexagon.hpp"
#include "tropigeo/line.hpp"
#include "tropigeo/span.hpp"
#include "tropigeo/tess.hpp"
#include "tropigeo/triangle.hpp"

#include "test_support.hpp"

#include <algorithm>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

using namespace tropigeo;

namespace {

struct Criterion {
  int id;
  std::string description;
  std::function<bool(std::string&)> run;
};

ProjPoint pp(int a, int b, int c) {
  return ProjPoint(TropScalar(a), TropScalar(b), TropScalar(c));
}

bool expect(bool cond, const char* what, std::string& detail) {
  if (!cond && detail.empty()) detail = what;
  return cond;
}

// --- criterion 1 -----------------------------------------------------------

bool criterion_non_good(std::string& detail) {
  const ProjPoint a = pp(-1, 1, 0), b = pp(0, 0, 0), c = pp(-1, 2, 0);
  bool ok = true;
  const ProjPoint ab = cross_product(a, b);
  const ProjPoint bc = cross_product(b, c);
  ok &= expect(ab == pp(1, 0, 1), "a x b != [1,0,1]", detail);
  ok &= expect(bc == pp(2, 0, 2), "b x c != [2,0,2]", detail);
  const ProjPoint chain = cross_product(ab, bc);
  ok &= expect(chain == pp(2, 3, 2), "(a x b) x (b x c) != [2,3,2]", detail);
  ok &= expect(chain == ab.negated(), "chain is not -(a x b)", detail);
  ok &= expect(chain != b, "chain unexpectedly equals b", detail);
  ok &= expect(classify_triangle(a, b, c).kind == TriangleKind::NotGood,
               "classification is not NotGood", detail);
  return ok;
}

// --- criterion 2 -----------------------------------------------------------

bool criterion_transversal_example(std::string& detail) {
  const ProjPoint a = pp(-3, -1, 0), b = pp(0, 0, 0), c = pp(-1, 2, 0);
  bool ok = expect(classify_triangle(a, b, c).kind == TriangleKind::Transversal,
                   "classification is not Transversal", detail);
  const ProjPoint ab = cross_product(a, b);
  const ProjPoint bc = cross_product(b, c);
  const ProjPoint ca = cross_product(c, a);
  ok &= expect(cross_product(ca, ab) == a, "(c x a) x (a x b) != a", detail);
  ok &= expect(cross_product(ab, bc) == b, "(a x b) x (b x c) != b", detail);
  ok &= expect(cross_product(bc, ca) == c, "(b x c) x (c x a) != c", detail);
  return ok;
}

// --- criterion 3 -----------------------------------------------------------

bool criterion_improper_examples(std::string& detail) {
  const TriangleClass first = classify_triangle(pp(0, 0, 0), pp(1, 1, 0), pp(0, 1, 0));
  const TriangleClass second = classify_triangle(pp(0, 0, 0), pp(1, 1, 0), pp(1, 0, 0));
  bool ok = expect(first.kind == TriangleKind::GoodImproper, "first triple not GoodImproper",
                   detail);
  ok &= expect(second.kind == TriangleKind::GoodImproper, "second triple not GoodImproper",
               detail);
  ok &= expect(first.pattern.has_value() && *first.pattern == CollapsePattern{1, 3, 5},
               "first collapse pattern is not {1,3,5}", detail);
  return ok;
}

// --- criterion 4 -----------------------------------------------------------

bool criterion_independent_not_good(std::string& detail) {
  const ProjPoint a = pp(0, 0, 0), b = pp(3, 9, 0), c = pp(2, 1, 0);
  bool ok = expect(tropically_independent({a, b, c}), "triple is not independent", detail);

  const std::array<Vec2, 3> pts = {interior_chart_coords(Chart::Z, a),
                                   interior_chart_coords(Chart::Z, b),
                                   interior_chart_coords(Chart::Z, c)};
  ok &= expect(!transversal_labeling(pts).has_value(), "a strict labeling exists", detail);
  ok &= expect(best_labeling(pts).violations == 1, "best labeling does not fail exactly once",
               detail);

  TropMatrix m(3, 3);
  for (int r = 0; r < 3; ++r) {
    m.at(r, 0) = TropScalar(pts[static_cast<size_t>(r)].x);
    m.at(r, 1) = TropScalar(pts[static_cast<size_t>(r)].y);
    m.at(r, 2) = TropScalar(0);
  }
  const PermanentResult det = trop_det(m);
  ok &= expect(det.value == TropScalar(11), "permanent is not 11", detail);
  ok &= expect(det.regular, "matrix is not regular", detail);
  return ok;
}

// --- criterion 5 -----------------------------------------------------------

bool equivalence_holds(const std::array<ProjPoint, 3>& t, std::string& detail) {
  const bool by_class = classify_triangle(t[0], t[1], t[2]).kind == TriangleKind::Transversal;
  const bool by_label = projective_transversal_labeling(t[0], t[1], t[2]).has_value();
  const bool collinear_triple = collinear(t[0], t[1], t[2]);
  const bool by_def = collinear_triple ? false : transversal_by_definition(t[0], t[1], t[2]);
  if (by_label != by_def || by_def != by_class) {
    std::ostringstream msg;
    msg << "mismatch at " << t[0].str() << " " << t[1].str() << " " << t[2].str()
        << ": labeling=" << by_label << " definition=" << by_def << " good&proper=" << by_class;
    detail = msg.str();
    return false;
  }
  return true;
}

bool criterion_characterization_suite(std::string& detail) {
  auto rng = testing::make_rng(1005);
  int transversal_count = 0;
  for (int iter = 0; iter < 1000; ++iter) {
    const auto t = testing::random_distinct_triple(rng, -10, 10);
    if (!equivalence_holds(t, detail)) return false;
    if (classify_triangle(t[0], t[1], t[2]).kind == TriangleKind::Transversal) {
      ++transversal_count;
    }
  }
  if (!expect(transversal_count > 0, "no transversal triple sampled", detail)) return false;

  std::vector<ProjPoint> grid;
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) grid.push_back(pp(x, y, 0));
  for (size_t i = 0; i < grid.size(); ++i) {
    for (size_t j = 0; j < grid.size(); ++j) {
      for (size_t k = 0; k < grid.size(); ++k) {
        if (i == j || j == k || i == k) continue;
        if (!equivalence_holds({grid[i], grid[j], grid[k]}, detail)) return false;
      }
    }
  }
  return true;
}

// --- criterion 6 -----------------------------------------------------------

bool criterion_span_suite(std::string& detail) {
  auto rng = testing::make_rng(1006);
  for (int iter = 0; iter < 100; ++iter) {
    // Random transversal triple from random valid side lengths.
    Rat l1, l2, l3, l5;
    do {
      l1 = testing::random_small_rat(rng, 1, 4);
      l2 = testing::random_small_rat(rng, 1, 4);
      l3 = testing::random_small_rat(rng, 1, 4);
      l5 = testing::random_small_rat(rng, 1, 4);
    } while (l5 >= std::min(l1 + l2, l2 + l3));
    const HexLengths lengths = complete_hexagon_lengths(l1, l2, l3, l5);
    const Vec2 base{testing::random_int_rat(rng, -6, 6), testing::random_int_rat(rng, -6, 6)};
    const auto triple = triangle_from_lengths(lengths, base);

    const TriangleClass cls = classify_triangle(triple[0], triple[1], triple[2]);
    if (!expect(cls.kind == TriangleKind::Transversal, "constructed triple not transversal",
                detail)) {
      return false;
    }

    const Hexagon hex = span_hexagon(triple[0], triple[1], triple[2]);
    const Polygon poly(hex.vertices.begin(), hex.vertices.end());
    const std::vector<ProjPoint> gens = {triple[0], triple[1], triple[2]};
    for (int s = 0; s < 50; ++s) {
      const Vec2 probe{base.x + testing::random_small_rat(rng, -9, 9),
                       base.y + testing::random_small_rat(rng, -9, 9)};
      const ProjPoint q = chart_embed(Chart::Z, {TropScalar(probe.x), TropScalar(probe.y)});
      const bool member = span_membership(q, gens).member;
      const bool inside = point_in_convex_polygon(probe, poly);
      if (member != inside) {
        detail = "span membership disagrees with the hexagon test at " + probe.str();
        return false;
      }
    }

    // Regular coordinate matrix with permanent c1 + b2 in the found labels.
    const auto& order = *cls.relabeling;
    std::array<Vec2, 3> labeled;
    for (int k = 0; k < 3; ++k) {
      labeled[static_cast<size_t>(k)] =
          interior_chart_coords(Chart::Z, triple[static_cast<size_t>(order[static_cast<size_t>(k)])]);
    }
    TropMatrix m(3, 3);
    for (int r = 0; r < 3; ++r) {
      m.at(r, 0) = TropScalar(labeled[static_cast<size_t>(r)].x);
      m.at(r, 1) = TropScalar(labeled[static_cast<size_t>(r)].y);
      m.at(r, 2) = TropScalar(0);
    }
    const PermanentResult det = trop_det(m);
    if (!expect(det.regular, "coordinate matrix not regular", detail)) return false;
    if (det.value != TropScalar(labeled[2].x + labeled[1].y)) {
      detail = "permanent differs from c1 + b2";
      return false;
    }
  }
  return true;
}

// --- criterion 7 -----------------------------------------------------------

bool criterion_algebraic_identities(std::string& detail) {
  auto rng = testing::make_rng(1007);
  for (int iter = 0; iter < 1000; ++iter) {
    const ProjPoint a = testing::random_interior_point(rng, -10, 10);
    const ProjPoint b = testing::random_interior_point(rng, -10, 10);
    if (!expect(cross_product(a, b) == cross_product(b, a), "cross product not symmetric",
                detail)) {
      return false;
    }
    if (!expect(cross_product(a, a) == a.negated(), "a x a != -a", detail)) return false;
    if (!expect(incident(b, TropLine(a)) == incident(a, TropLine(b)),
                "incidence duality fails", detail)) {
      return false;
    }

    // Cramer at n = 2 against the cross product.
    TropMatrix m(2, 3);
    for (int c = 0; c < 3; ++c) {
      m.at(0, c) = a[c];
      m.at(1, c) = b[c];
    }
    const CramerResult cramer = cramer_intersection(m);
    if (!expect(ProjPoint(cramer.point[0], cramer.point[1], cramer.point[2]) ==
                    cross_product(a, b),
                "Cramer disagrees with the cross product", detail)) {
      return false;
    }
  }

  auto rng2 = testing::make_rng(1017);
  int checked = 0;
  while (checked < 1000) {
    const auto t = testing::random_distinct_triple(rng2, -10, 10);
    if (collinear(t[0], t[1], t[2])) continue;
    const ProjPoint ca = cross_product(t[2], t[0]);
    const ProjPoint ab = cross_product(t[0], t[1]);
    if (ca == ab) continue;
    ++checked;
    const ProjPoint chain = cross_product(ca, ab);
    if (!(chain == ca.negated() || chain == ab.negated() || chain == t[0])) {
      detail = "cross-product chain escapes its three admissible values";
      return false;
    }
  }
  return true;
}

// --- criterion 8 -----------------------------------------------------------

bool criterion_parameter_round_trip(std::string& detail) {
  auto rng = testing::make_rng(1008);
  int done = 0;
  while (done < 200) {
    const Rat l1 = testing::random_small_rat(rng, 1, 5);
    const Rat l2 = testing::random_small_rat(rng, 1, 5);
    const Rat l3 = testing::random_small_rat(rng, 1, 5);
    const Rat l5 = testing::random_small_rat(rng, 1, 5);
    if (l5 >= std::min(l1 + l2, l2 + l3)) {
      bool rejected = false;
      try {
        complete_hexagon_lengths(l1, l2, l3, l5);
      } catch (const DomainError&) {
        rejected = true;
      }
      if (!expect(rejected, "oversized l5 was accepted", detail)) return false;
      continue;
    }
    ++done;
    const HexLengths lengths = complete_hexagon_lengths(l1, l2, l3, l5);
    const Vec2 base{testing::random_small_rat(rng, -5, 5), testing::random_small_rat(rng, -5, 5)};
    const auto triple = triangle_from_lengths(lengths, base);
    const Hexagon hex = span_hexagon(triple[0], triple[1], triple[2]);
    if (hex.lengths != lengths.values()) {
      detail = "hexagon lengths differ from the completed tuple";
      return false;
    }
  }
  // A handful of explicitly invalid tuples must be rejected.
  for (const auto& [l1, l5] : {std::pair{1, 3}, {1, 2}, {2, 6}}) {
    try {
      complete_hexagon_lengths(l1, 1, 1, l5);
      detail = "invalid l5 accepted";
      return false;
    } catch (const DomainError&) {
    }
  }
  return true;
}

// --- criterion 9 -----------------------------------------------------------

bool criterion_improper_catalog(std::string& detail) {
  const CollapseCatalog catalog = enumerate_collapse_patterns();
  bool ok = expect(catalog.outcomes.size() == 63, "catalog does not cover all 63 subsets",
                   detail);

  for (const PatternOutcome& o : catalog.outcomes) {
    if (o.accepted) {
      if (!o.witness || !o.lengths) {
        detail = "accepted pattern " + o.pattern.str() + " lacks a witness";
        return false;
      }
      const auto& w = *o.witness;
      const TriangleClass cls = classify_triangle(w[0], w[1], w[2]);
      if (cls.kind != TriangleKind::GoodImproper || *cls.pattern != o.pattern) {
        detail = "witness for " + o.pattern.str() + " fails verification";
        return false;
      }
    } else if (o.note.empty()) {
      detail = "rejected pattern " + o.pattern.str() + " lacks a certificate";
      return false;
    }
  }

  for (int s = 1; s <= 6; ++s) {
    CollapsePattern single;
    single.add(s);
    const auto it = std::find_if(catalog.outcomes.begin(), catalog.outcomes.end(),
                                 [&](const PatternOutcome& o) { return o.pattern == single; });
    ok &= expect(it != catalog.outcomes.end() && it->accepted,
                 "a pentagon pattern is not realizable", detail);
  }
  for (const CollapsePattern& p : {CollapsePattern{1, 3, 5}, CollapsePattern{2, 4, 6}}) {
    const auto it = std::find_if(catalog.outcomes.begin(), catalog.outcomes.end(),
                                 [&](const PatternOutcome& o) { return o.pattern == p; });
    ok &= expect(it != catalog.outcomes.end() && it->accepted,
                 "a triangle pattern is not realizable", detail);
  }

  const int reference_count = 14;
  std::cout << "  note: computed " << catalog.accepted_count
            << " realizable collapse patterns (reference tally " << reference_count << ")\n";
  return ok;
}

// --- criterion 10 ----------------------------------------------------------

bool criterion_tessellation(std::string& detail) {
  const HexLengths unit({Rat(1), Rat(1), Rat(1), Rat(1), Rat(1), Rat(1)});
  const Region region(Rat(0), Rat(6), Rat(0), Rat(6));
  const Tiling tiling = generate_tiling(unit, region);
  const TilingReport report = validate_tiling(tiling.cells, region);
  if (!report.all_ok()) {
    detail = report.issues.empty() ? "validation failed" : report.issues.front();
    return false;
  }
  return true;
}

// --- criterion 11 ----------------------------------------------------------

bool criterion_cli_golden(std::string& detail) {
  using testing::run_cli_process;
  {
    const auto run = run_cli_process({"classify", "[-3,-1,0]", "[0,0,0]", "[-1,2,0]"});
    if (run.status != 0 || run.stdout_text != "Transversal (a=(-3,-1) b=(-1,2) c=(0,0))\n") {
      detail = "classify golden output mismatch";
      return false;
    }
  }
  {
    const auto run = run_cli_process({"cross", "[-1,1,0]", "[0,0,0]"});
    if (run.status != 0 || run.stdout_text != "[0,-1,0]\n") {
      detail = "cross golden output mismatch";
      return false;
    }
  }
  {
    const auto run = run_cli_process({"det", "3", "0,0,0;3,9,0;2,1,0"});
    if (run.status != 0 || run.stdout_text != "value=11 regular=true\n") {
      detail = "det golden output mismatch";
      return false;
    }
  }
  {
    const std::vector<std::string> args = {"render", "--viewport=-5,2,-3,4",
                                           "triangle:[-3,-1,0]:[0,0,0]:[-1,2,0]"};
    const auto first = run_cli_process(args);
    const auto second = run_cli_process(args);
    if (first.status != 0 || first.stdout_text.empty() ||
        first.stdout_text != second.stdout_text) {
      detail = "renderer is not byte deterministic";
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "non-good triple: cross-product chain lands on -(a x b)", criterion_non_good},
      {2, "transversal triple: nested cross-product identities", criterion_transversal_example},
      {3, "improper good triples and collapse pattern {1,3,5}", criterion_improper_examples},
      {4, "independent non-good triple: labeling gap and permanent 11",
       criterion_independent_not_good},
      {5, "characterization equivalence on random and grid triples",
       criterion_characterization_suite},
      {6, "span equals the solid hexagon; regular matrix with permanent c1+b2",
       criterion_span_suite},
      {7, "algebraic identities: symmetry, self-product, duality, trichotomy, Cramer",
       criterion_algebraic_identities},
      {8, "side-length completion round trip and rejection", criterion_parameter_round_trip},
      {9, "collapse-pattern catalog with witnesses and certificates",
       criterion_improper_catalog},
      {10, "hexagon tessellation of a 6x6 region validates exactly", criterion_tessellation},
      {11, "CLI golden outputs and renderer determinism", criterion_cli_golden},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (ok) {
      std::cout << "PASS criterion " << c.id << ": " << c.description << "\n";
    } else {
      ++failures;
      std::cout << "FAIL criterion " << c.id << ": " << c.description;
      if (!detail.empty()) std::cout << " -- " << detail;
      std::cout << "\n";
    }
  }
  if (failures) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
