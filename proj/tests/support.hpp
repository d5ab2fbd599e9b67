#pragma once

// Shared data generators for the exact-arithmetic and regression tests.

#include <cstdint>
#include <vector>

#include "qnr/exact/matrix.hpp"
#include "qnr/real_matrix.hpp"
#include "qnr/rng.hpp"

namespace test_support {

// Random rational matrix with numerators in [-3, 3] and denominators in
// {1, 2, 3}; zero entries arise whenever the numerator lands on zero.
inline qnr::exact::Matrix random_rational_matrix(qnr::Rng& rng, std::size_t rows,
                                                 std::size_t cols) {
  qnr::exact::Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      const long num = static_cast<long>(rng.below(7)) - 3;
      const long den = static_cast<long>(rng.below(3)) + 1;
      m.at(r, c) = qnr::exact::Rational(num, den);
    }
  return m;
}

inline qnr::exact::Matrix random_rational_matrix(qnr::Rng& rng, std::size_t max_rows,
                                                 std::size_t max_cols, bool) {
  const std::size_t rows = 1 + rng.below(max_rows);
  const std::size_t cols = 1 + rng.below(max_cols);
  return random_rational_matrix(rng, rows, cols);
}

// Rank-deficient by construction: an (r x k) times (k x c) product with
// k below min(r, c).
inline qnr::exact::Matrix random_low_rank_matrix(qnr::Rng& rng, std::size_t rows,
                                                 std::size_t cols) {
  const std::size_t k = 1 + rng.below(std::min(rows, cols) > 1 ? std::min(rows, cols) - 1 : 1);
  const auto left = random_rational_matrix(rng, rows, k);
  const auto right = random_rational_matrix(rng, k, cols);
  return left * right;
}

// Random regression design with a leading intercept column.
inline qnr::RealMatrix random_design(qnr::Rng& rng, std::size_t n, std::size_t p) {
  qnr::RealMatrix x(n, p);
  for (std::size_t i = 0; i < n; ++i) {
    x.at(i, 0) = 1.0;
    for (std::size_t j = 1; j < p; ++j) x.at(i, j) = 4.0 * rng.uniform_double() - 2.0;
  }
  return x;
}

}  // namespace test_support
