#pragma once

#include "tropigeo/scalar.hpp"

#include <cstdint>
#include <vector>

namespace tropigeo {

// Largest dimension accepted by the exhaustive permanent. Overridable per
// call (the CLI wires this to the TROPIGEO_MAX_N environment variable).
inline constexpr int kDefaultPermanentDimLimit = 8;

// Dense matrix over the tropical semifield, row major.
class TropMatrix {
 public:
  TropMatrix(int rows, int cols);  // filled with -inf

  static TropMatrix from_rows(const std::vector<std::vector<TropScalar>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const TropScalar& at(int r, int c) const { return entries_[static_cast<size_t>(r) * cols_ + c]; }
  TropScalar& at(int r, int c) { return entries_[static_cast<size_t>(r) * cols_ + c]; }

  TropMatrix transposed() const;
  TropMatrix without_column(int col) const;
  bool all_finite() const;

 private:
  int rows_;
  int cols_;
  std::vector<TropScalar> entries_;
};

struct PermanentResult {
  TropScalar value;
  std::uint64_t optimal_count = 0;
  // Unique permutation attains the maximum and the maximum is finite.
  bool regular = false;
};

// Tropical determinant (permanent): maximum over all permutations of the sum
// of selected entries, one per row and column, by exhaustive enumeration.
PermanentResult trop_det(const TropMatrix& a, int dim_limit = kDefaultPermanentDimLimit);

struct CramerResult {
  std::vector<TropScalar> point;     // canonical projective coordinates
  bool stable_equals_plain = false;  // every maximal minor tropically regular
};

// Stable intersection of n tropical hyperplanes read off an n x (n+1)
// coefficient matrix with finite entries: coordinate j is the permanent of
// the minor obtained by deleting column j.
CramerResult cramer_intersection(const TropMatrix& a,
                                 int dim_limit = kDefaultPermanentDimLimit);

}  // namespace tropigeo
