#pragma once

#include <cstdint>
#include <stdexcept>

#include "qnr/exact/elimination.hpp"
#include "qnr/exact/matrix.hpp"

namespace qnr::exact {

// Inverse of a nonsingular square matrix via rref([M | I]).
inline Matrix inverse(const Matrix& m, PivotBackend backend = PivotBackend::Classical,
                      std::uint64_t seed = 0, PivotStats* stats = nullptr) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix must be square");
  const std::size_t n = m.rows();
  const auto red = rref(m.augment(Matrix::identity(n)), backend, seed);
  if (stats) *stats += red.backend_stats;
  // [M | I] always has row rank n; M is singular exactly when a pivot falls
  // inside the augmented half.
  if (n > 0 && red.pivot_cols.back() >= n)
    throw std::invalid_argument("inverse: matrix is singular");
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv.at(r, c) = red.rref.at(r, n + c);
  return inv;
}

// Moore-Penrose pseudoinverse by rank factorization: A = C F with C the pivot
// columns of A and F the nonzero rows of rref(A), then
//   A+ = F^T (F F^T)^-1 (C^T C)^-1 C^T.
// Exact over rationals; satisfies all four Penrose identities.  The zero
// matrix maps to the zero matrix of transposed shape.
inline Matrix pseudoinverse(const Matrix& a, PivotBackend backend = PivotBackend::Classical,
                            std::uint64_t seed = 0, PivotStats* stats = nullptr) {
  const auto red = rref(a, backend, seed);
  if (stats) *stats += red.backend_stats;
  if (red.rank == 0) return Matrix(a.cols(), a.rows());  // zero matrix convention

  const Matrix c = a.columns(red.pivot_cols);
  const Matrix f = red.rref.top_rows(red.rank);
  const Matrix ct = c.transpose();
  const Matrix ft = f.transpose();
  return ft * inverse(f * ft, backend, seed + 1, stats) * inverse(ct * c, backend, seed + 2, stats) *
         ct;
}

}  // namespace qnr::exact
