#include "tropigeo/span.hpp"

#include "tropigeo/error.hpp"

#include <algorithm>

namespace tropigeo {

namespace {

// Membership core without the arity guard, so independence checks can use a
// single remaining generator.
SpanResult principal_solution(const ProjPoint& u, const std::vector<ProjPoint>& generators) {
  SpanResult out;
  out.witness.reserve(generators.size());
  for (const ProjPoint& g : generators) {
    Rat lambda = u[0].rational() - g[0].rational();
    for (int i = 1; i < 3; ++i) {
      lambda = std::min(lambda, u[i].rational() - g[i].rational());
    }
    out.witness.push_back(std::move(lambda));
  }
  out.member = true;
  for (int i = 0; i < 3 && out.member; ++i) {
    Rat reached = out.witness[0] + generators[0][i].rational();
    for (size_t j = 1; j < generators.size(); ++j) {
      reached = std::max(reached, out.witness[j] + generators[j][i].rational());
    }
    out.member = reached == u[i].rational();
  }
  if (!out.member) out.witness.clear();
  return out;
}

}  // namespace

SpanResult span_membership(const ProjPoint& u, const std::vector<ProjPoint>& generators) {
  if (!u.is_interior()) throw DomainError("span membership requires an interior point");
  if (generators.size() < 2 || generators.size() > 3) {
    throw DomainError("span membership takes 2 or 3 generators");
  }
  for (const ProjPoint& g : generators) {
    if (!g.is_interior()) throw DomainError("span membership requires interior generators");
  }
  return principal_solution(u, generators);
}

bool tropically_independent(const std::vector<ProjPoint>& points) {
  if (points.size() < 2 || points.size() > 4) {
    throw DomainError("independence is checked for 2 to 4 points");
  }
  for (size_t i = 0; i < points.size(); ++i) {
    if (!points[i].is_interior()) throw DomainError("independence requires interior points");
    for (size_t j = i + 1; j < points.size(); ++j) {
      if (points[i] == points[j]) throw DomainError("independence requires distinct points");
    }
  }
  for (size_t j = 0; j < points.size(); ++j) {
    std::vector<ProjPoint> rest;
    rest.reserve(points.size() - 1);
    for (size_t i = 0; i < points.size(); ++i) {
      if (i != j) rest.push_back(points[i]);
    }
    if (principal_solution(points[j], rest).member) return false;
  }
  return true;
}

}  // namespace tropigeo
