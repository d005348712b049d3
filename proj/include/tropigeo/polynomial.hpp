#pragma once

#include "tropigeo/scalar.hpp"

#include <map>
#include <optional>
#include <vector>

namespace tropigeo {

using MultiIndex = std::vector<unsigned>;

// Max-plus polynomial with finite rational coefficients keyed by exponent
// tuples. Terms with coefficient -inf are never stored; at least one term.
class TropPolynomial {
 public:
  TropPolynomial(int num_vars, std::map<MultiIndex, Rat> terms);

  int num_vars() const { return num_vars_; }
  const std::map<MultiIndex, Rat>& terms() const { return terms_; }

  unsigned max_total_degree() const;
  bool is_homogeneous() const;

 private:
  int num_vars_;
  std::map<MultiIndex, Rat> terms_;
};

struct PolyEvalResult {
  TropScalar value;
  int attaining_terms = 0;
  // Maximum attained by at least two terms with a finite value.
  bool on_variety = false;
};

PolyEvalResult poly_eval(const TropPolynomial& p, const std::vector<TropScalar>& point);

struct HomogenizeResult {
  TropPolynomial homogenized;
  // Present when every pure power X_j^d carries a finite coefficient.
  std::optional<unsigned> degree;
};

// Pads each term with a fresh variable up to the maximal total degree; a
// polynomial that is already homogeneous is returned unchanged.
HomogenizeResult homogenize_and_degree(const TropPolynomial& p);

}  // namespace tropigeo
