#include "tropigeo/collapse_catalog.hpp"

#include <bit>

namespace tropigeo {

namespace {

// Smallest positive integer lengths with the collapsed sides at zero and the
// closure relations l1+l2 = l4+l5, l2+l3 = l5+l6 satisfied, by brute force.
std::optional<std::array<Rat, 6>> solve_lengths(const CollapsePattern& pattern) {
  std::array<int, 6> l{};
  std::vector<int> free_sides;
  for (int s = 1; s <= 6; ++s) {
    if (!pattern.contains(s)) free_sides.push_back(s);
  }
  const int k = static_cast<int>(free_sides.size());
  std::vector<int> choice(static_cast<size_t>(k), 1);
  while (true) {
    for (int i = 0; i < k; ++i) l[static_cast<size_t>(free_sides[static_cast<size_t>(i)] - 1)] = choice[static_cast<size_t>(i)];
    if (l[0] + l[1] == l[3] + l[4] && l[1] + l[2] == l[4] + l[5]) {
      std::array<Rat, 6> out;
      for (int i = 0; i < 6; ++i) out[static_cast<size_t>(i)] = l[static_cast<size_t>(i)];
      return out;
    }
    int pos = k - 1;
    while (pos >= 0 && choice[static_cast<size_t>(pos)] == 4) {
      choice[static_cast<size_t>(pos)] = 1;
      --pos;
    }
    if (pos < 0) return std::nullopt;
    ++choice[static_cast<size_t>(pos)];
  }
}

std::string adjacency_reason(const CollapsePattern& pattern) {
  // Around a side vertex: both endpoints collapse onto it, merging two
  // triangle vertices. Around a triangle vertex: the two side lines through
  // it coincide, so the triple is collinear.
  static const char* kMergeNames[3] = {"a and b", "b and c", "c and a"};
  static const char* kVertexNames[3] = {"b", "c", "a"};
  for (int v = 0; v < 3; ++v) {
    const int s1 = 2 * v + 1, s2 = 2 * v + 2;
    if (pattern.contains(s1) && pattern.contains(s2)) {
      return std::string("sides ") + std::to_string(s1) + "," + std::to_string(s2) +
             " collapsed together merge vertices " + kMergeNames[v];
    }
  }
  for (int v = 0; v < 3; ++v) {
    const int s1 = 2 * v + 2, s2 = (2 * v + 3 > 6) ? 1 : 2 * v + 3;
    if (pattern.contains(s1) && pattern.contains(s2)) {
      return std::string("sides ") + std::to_string(s1) + "," + std::to_string(s2) +
             " collapsed together make both side lines through " + kVertexNames[v] +
             " coincide, forcing a collinear triple";
    }
  }
  return "";
}

}  // namespace

CollapseCatalog enumerate_collapse_patterns() {
  CollapseCatalog catalog;

  for (unsigned mask = 1; mask < 64; ++mask) {
    PatternOutcome outcome;
    outcome.pattern = CollapsePattern::from_mask(mask);

    if (!outcome.pattern.independent()) {
      outcome.accepted = false;
      outcome.note = adjacency_reason(outcome.pattern);
      catalog.outcomes.push_back(std::move(outcome));
      continue;
    }

    auto lengths = solve_lengths(outcome.pattern);
    if (!lengths) {
      outcome.note = "closure relations admit no nonnegative solution with this zero set";
      catalog.outcomes.push_back(std::move(outcome));
      continue;
    }
    outcome.lengths = *lengths;

    const std::array<Vec2, 6> walk = hexagon_walk(*lengths, Vec2{Rat(0), Rat(0)});
    const auto embed = [](const Vec2& v) {
      return chart_embed(Chart::Z, {TropScalar(v.x), TropScalar(v.y)});
    };
    const std::array<ProjPoint, 3> triple = {embed(walk[0]), embed(walk[2]), embed(walk[4])};

    const TriangleClass cls = classify_triangle(triple[0], triple[1], triple[2]);
    if (cls.kind != TriangleKind::GoodImproper) {
      outcome.note = std::string("witness triple classifies as ") +
                     std::string(to_string(cls.kind)) + ", not GoodImproper";
      catalog.outcomes.push_back(std::move(outcome));
      continue;
    }
    if (*cls.pattern != outcome.pattern) {
      outcome.note = "witness triple realizes pattern " + cls.pattern->str() + " instead";
      catalog.outcomes.push_back(std::move(outcome));
      continue;
    }

    outcome.accepted = true;
    outcome.witness = triple;
    outcome.note = "verified GoodImproper witness with lengths " +
                   [&] {
                     std::string s;
                     for (int i = 0; i < 6; ++i) {
                       if (i) s += ",";
                       s += format_rational((*lengths)[static_cast<size_t>(i)]);
                     }
                     return s;
                   }();
    catalog.outcomes.push_back(std::move(outcome));
  }

  for (const PatternOutcome& o : catalog.outcomes) {
    if (o.accepted) ++catalog.accepted_count;
  }
  for (size_t i = 0; i < catalog.outcomes.size(); ++i) {
    for (size_t j = i + 1; j < catalog.outcomes.size(); ++j) {
      if (!catalog.outcomes[i].accepted || !catalog.outcomes[j].accepted) continue;
      const unsigned diff = catalog.outcomes[i].pattern.mask() ^ catalog.outcomes[j].pattern.mask();
      if (std::popcount(diff) == 1) {
        catalog.edges.emplace_back(catalog.outcomes[i].pattern, catalog.outcomes[j].pattern);
      }
    }
  }
  return catalog;
}

}  // namespace tropigeo
