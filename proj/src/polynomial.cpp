#include "tropigeo/polynomial.hpp"

#include "tropigeo/error.hpp"

#include <numeric>

namespace tropigeo {

namespace {

unsigned total_degree(const MultiIndex& idx) {
  return std::accumulate(idx.begin(), idx.end(), 0u);
}

}  // namespace

TropPolynomial::TropPolynomial(int num_vars, std::map<MultiIndex, Rat> terms)
    : num_vars_(num_vars), terms_(std::move(terms)) {
  if (num_vars_ < 0) throw DomainError("negative variable count");
  if (terms_.empty()) throw DomainError("polynomial needs at least one term");
  for (const auto& [idx, coeff] : terms_) {
    (void)coeff;
    if (static_cast<int>(idx.size()) != num_vars_) {
      throw DomainError("multi-index arity does not match variable count");
    }
  }
}

unsigned TropPolynomial::max_total_degree() const {
  unsigned d = 0;
  for (const auto& [idx, coeff] : terms_) {
    (void)coeff;
    d = std::max(d, total_degree(idx));
  }
  return d;
}

bool TropPolynomial::is_homogeneous() const {
  const unsigned d = total_degree(terms_.begin()->first);
  for (const auto& [idx, coeff] : terms_) {
    (void)coeff;
    if (total_degree(idx) != d) return false;
  }
  return true;
}

PolyEvalResult poly_eval(const TropPolynomial& p, const std::vector<TropScalar>& point) {
  if (static_cast<int>(point.size()) != p.num_vars()) {
    throw DomainError("evaluation point arity mismatch");
  }

  PolyEvalResult out;
  out.value = TropScalar::neg_infinity();
  for (const auto& [idx, coeff] : p.terms()) {
    TropScalar term(coeff);
    for (size_t k = 0; k < idx.size() && term.is_finite(); ++k) {
      if (idx[k] == 0) continue;  // zero exponent contributes nothing
      if (!point[k].is_finite()) {
        term = TropScalar::neg_infinity();
      } else {
        term = term.shifted(Rat(idx[k]) * point[k].rational());
      }
    }
    if (term > out.value) {
      out.value = term;
      out.attaining_terms = 1;
    } else if (term == out.value) {
      ++out.attaining_terms;
    }
  }
  out.on_variety = out.value.is_finite() && out.attaining_terms >= 2;
  return out;
}

HomogenizeResult homogenize_and_degree(const TropPolynomial& p) {
  const unsigned d = p.max_total_degree();

  TropPolynomial homogenized = [&] {
    if (p.is_homogeneous()) return p;
    std::map<MultiIndex, Rat> padded;
    for (const auto& [idx, coeff] : p.terms()) {
      MultiIndex extended = idx;
      unsigned deg = 0;
      for (unsigned e : idx) deg += e;
      extended.push_back(d - deg);
      padded.emplace(std::move(extended), coeff);
    }
    return TropPolynomial(p.num_vars() + 1, std::move(padded));
  }();

  // Degree is defined only when every pure power X_j^d is present.
  bool pure_powers = true;
  const int n = homogenized.num_vars();
  for (int j = 0; j < n && pure_powers; ++j) {
    MultiIndex pure(static_cast<size_t>(n), 0u);
    if (n > 0) pure[static_cast<size_t>(j)] = d;
    pure_powers = homogenized.terms().contains(pure);
  }
  if (n == 0) pure_powers = homogenized.terms().contains(MultiIndex{});

  HomogenizeResult out{std::move(homogenized), std::nullopt};
  if (pure_powers) out.degree = d;
  return out;
}

}  // namespace tropigeo
