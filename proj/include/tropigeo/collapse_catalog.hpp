#pragma once

#include "tropigeo/hexagon.hpp"
#include "tropigeo/triangle.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tropigeo {

// One candidate set of collapsed hexagon sides, with the verdict of the
// exhaustive realizability search.
struct PatternOutcome {
  CollapsePattern pattern;
  bool accepted = false;
  std::optional<std::array<Rat, 6>> lengths;        // witness side lengths
  std::optional<std::array<ProjPoint, 3>> witness;  // witness triple (a, b, c)
  std::string note;  // verification summary or rejection reason
};

struct CollapseCatalog {
  // Every nonempty subset of {1..6}, in mask order.
  std::vector<PatternOutcome> outcomes;
  // Accepted patterns whose collapsed sets differ by exactly one side.
  std::vector<std::pair<CollapsePattern, CollapsePattern>> edges;
  int accepted_count = 0;
};

// Tries every nonempty subset of sides: adjacent sides are rejected with the
// forced-merge argument, the rest get an exact witness built from side
// lengths solving the closure relations, kept only when the witness triple
// classifies as a good improper triangle with exactly that pattern.
CollapseCatalog enumerate_collapse_patterns();

}  // namespace tropigeo
