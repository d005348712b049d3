#include "tropigeo/matrix.hpp"

#include "tropigeo/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace tropigeo {

TropMatrix::TropMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 1 || cols < 1) throw DomainError("matrix must have at least one row and column");
  entries_.resize(static_cast<size_t>(rows) * cols);
}

TropMatrix TropMatrix::from_rows(const std::vector<std::vector<TropScalar>>& rows) {
  if (rows.empty() || rows.front().empty()) {
    throw DomainError("matrix must have at least one row and column");
  }
  TropMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
  for (int r = 0; r < m.rows_; ++r) {
    if (static_cast<int>(rows[r].size()) != m.cols_) {
      throw DomainError("ragged matrix rows");
    }
    for (int c = 0; c < m.cols_; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

TropMatrix TropMatrix::transposed() const {
  TropMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

TropMatrix TropMatrix::without_column(int col) const {
  if (cols_ < 2) throw DomainError("cannot drop the only column");
  TropMatrix m(rows_, cols_ - 1);
  for (int r = 0; r < rows_; ++r) {
    int cc = 0;
    for (int c = 0; c < cols_; ++c) {
      if (c == col) continue;
      m.at(r, cc++) = at(r, c);
    }
  }
  return m;
}

bool TropMatrix::all_finite() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const TropScalar& s) { return s.is_finite(); });
}

PermanentResult trop_det(const TropMatrix& a, int dim_limit) {
  if (a.rows() != a.cols()) throw DomainError("tropical determinant needs a square matrix");
  const int n = a.rows();
  if (n > dim_limit) {
    throw DomainError("matrix dimension " + std::to_string(n) + " above permanent limit " +
                      std::to_string(dim_limit));
  }

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);

  PermanentResult best;
  best.value = TropScalar::neg_infinity();
  do {
    TropScalar sum(Rat(0));
    for (int r = 0; r < n && sum.is_finite(); ++r) sum = trop_mul(sum, a.at(r, perm[r]));
    if (sum > best.value) {
      best.value = sum;
      best.optimal_count = 1;
    } else if (sum == best.value) {
      ++best.optimal_count;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  best.regular = best.value.is_finite() && best.optimal_count == 1;
  return best;
}

CramerResult cramer_intersection(const TropMatrix& a, int dim_limit) {
  const int n = a.rows();
  if (a.cols() != n + 1) {
    throw DomainError("Cramer input must be n x (n+1)");
  }
  if (n + 1 > dim_limit) {
    throw DomainError("Cramer dimension " + std::to_string(n) + " above limit " +
                      std::to_string(dim_limit - 1));
  }
  if (!a.all_finite()) throw DomainError("Cramer input must have finite entries");

  CramerResult out;
  out.stable_equals_plain = true;
  out.point.reserve(n + 1);
  for (int j = 0; j <= n; ++j) {
    PermanentResult minor = trop_det(a.without_column(j), dim_limit);
    out.point.push_back(minor.value);
    out.stable_equals_plain = out.stable_equals_plain && minor.regular;
  }

  // Normalize the projective representative: largest coordinate becomes 0.
  // Finite entries everywhere, so the maximum is finite.
  TropScalar max = out.point.front();
  for (const TropScalar& s : out.point) max = trop_add(max, s);
  const Rat shift = -max.rational();
  for (TropScalar& s : out.point) s = s.shifted(shift);
  return out;
}

}  // namespace tropigeo
