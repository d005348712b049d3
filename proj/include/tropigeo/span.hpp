#pragma once

#include "tropigeo/point.hpp"

#include <vector>

namespace tropigeo {

struct SpanResult {
  bool member = false;
  std::vector<Rat> witness;  // one coefficient per generator, valid iff member
};

// Does a tropical combination of the generators reproduce u? Decided via the
// principal solution of the max-plus system: lambda_j = min_i (u_i - g_j,i)
// is the greatest subsolution, so membership holds exactly when it attains u.
SpanResult span_membership(const ProjPoint& u, const std::vector<ProjPoint>& generators);

// No point of the family lies in the span of the others (2 to 4 points).
bool tropically_independent(const std::vector<ProjPoint>& points);

}  // namespace tropigeo
