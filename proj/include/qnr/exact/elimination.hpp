#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qnr/exact/matrix.hpp"
#include "qnr/grover/search.hpp"
#include "qnr/rng.hpp"

namespace qnr::exact {

// Pivot-row search strategy for Gauss-Jordan elimination.
enum class PivotBackend { Classical, QuantumSim };

struct PivotStats {
  std::uint64_t comparisons = 0;      // entries examined by classical scans
  std::uint64_t oracle_calls = 0;     // Grover queries, incl. verifications
  std::uint64_t grover_rounds = 0;    // measurement rounds across searches
  std::uint64_t grover_searches = 0;  // grover_search invocations

  PivotStats& operator+=(const PivotStats& o) {
    comparisons += o.comparisons;
    oracle_calls += o.oracle_calls;
    grover_rounds += o.grover_rounds;
    grover_searches += o.grover_searches;
    return *this;
  }
};

// Reduced row-echelon form plus the pivot structure that elimination found.
struct RrefResult {
  Matrix rref;
  std::vector<std::size_t> pivot_cols;  // strictly increasing
  std::size_t rank = 0;
  PivotStats backend_stats;
};

struct SolutionSet {
  bool consistent = false;
  std::optional<std::vector<Rational>> particular;  // free variables set to zero
  std::vector<std::vector<Rational>> nullspace_basis;
  PivotStats backend_stats;
};

namespace detail {

inline int padded_qubits(std::size_t len) {
  int n = 1;
  while ((std::size_t{1} << n) < len) ++n;
  return n;
}

}  // namespace detail

// Locates a nonzero entry in the column slice, or absent if all zero.
//
// The classical backend scans for the smallest nonzero offset.  The quantum
// backend pads the slice to the next power of two, marks the nonzero entries,
// and runs a simulated Grover search; any verified nonzero offset may come
// back.  If the search exhausts its rounds it is audited by a classical scan,
// so absence always means the slice is identically zero.
inline std::optional<std::size_t> find_pivot(std::span<const Rational> column_slice,
                                             PivotBackend backend, std::uint64_t seed,
                                             PivotStats* stats = nullptr) {
  PivotStats local;
  PivotStats& s = stats ? *stats : local;
  if (column_slice.empty()) return std::nullopt;

  if (backend == PivotBackend::Classical) {
    for (std::size_t i = 0; i < column_slice.size(); ++i) {
      ++s.comparisons;
      if (!column_slice[i].is_zero()) return i;
    }
    return std::nullopt;
  }

  const std::size_t len = column_slice.size();
  const int n_qubits = detail::padded_qubits(len);
  grover::Oracle oracle{std::uint64_t{1} << n_qubits, [column_slice, len](std::uint64_t i) {
                          return i < len && !column_slice[i].is_zero();
                        }};
  const auto result = grover::grover_search(oracle, n_qubits, seed);
  ++s.grover_searches;
  s.grover_rounds += result.rounds;
  s.oracle_calls += result.oracle_calls;
  if (result.found_index) return static_cast<std::size_t>(*result.found_index);

  // Rounds exhausted: audit classically so a nonzero column can never be
  // misreported as pivotless.
  for (std::size_t i = 0; i < len; ++i) {
    ++s.comparisons;
    if (!column_slice[i].is_zero()) return i;
  }
  return std::nullopt;
}

// Gauss-Jordan elimination to reduced row-echelon form, exact over rationals.
// The RREF is unique, so the result is independent of backend and seed; only
// backend_stats reflects how pivots were located.
inline RrefResult rref(const Matrix& m, PivotBackend backend = PivotBackend::Classical,
                       std::uint64_t seed = 0) {
  Matrix r = m;
  RrefResult out{r, {}, 0, {}};
  std::size_t row = 0;

  for (std::size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
    std::vector<Rational> slice;
    slice.reserve(r.rows() - row);
    for (std::size_t i = row; i < r.rows(); ++i) slice.push_back(r.at(i, col));

    const auto offset =
        find_pivot(slice, backend, derive_seed(seed, col), &out.backend_stats);
    if (!offset) continue;

    const std::size_t p = row + *offset;
    if (p != row)
      for (std::size_t c = 0; c < r.cols(); ++c) std::swap(r.at(row, c), r.at(p, c));

    const Rational inv = r.at(row, col).reciprocal();
    for (std::size_t c = 0; c < r.cols(); ++c) r.at(row, c) *= inv;

    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == row || r.at(i, col).is_zero()) continue;
      const Rational factor = r.at(i, col);
      for (std::size_t c = 0; c < r.cols(); ++c)
        r.at(i, c) -= factor * r.at(row, c);
    }

    out.pivot_cols.push_back(col);
    ++row;
  }

  out.rank = out.pivot_cols.size();
  out.rref = std::move(r);
  return out;
}

// Kronecker's condition: A x = b is consistent iff the augmented column is
// not a pivot column of rref([A | b]).
inline bool is_consistent(const Matrix& A, const std::vector<Rational>& b,
                          PivotBackend backend = PivotBackend::Classical,
                          std::uint64_t seed = 0) {
  if (b.size() != A.rows()) throw std::invalid_argument("is_consistent: length(b) != rows(A)");
  const auto result = rref(A.augment(Matrix::column_vector(b)), backend, seed);
  return result.pivot_cols.empty() || result.pivot_cols.back() != A.cols();
}

// Full solution set of A x = b: a particular solution with the free variables
// set to zero, plus a basis of the nullspace, all exact.
inline SolutionSet solve(const Matrix& A, const std::vector<Rational>& b,
                         PivotBackend backend = PivotBackend::Classical,
                         std::uint64_t seed = 0) {
  if (b.size() != A.rows()) throw std::invalid_argument("solve: length(b) != rows(A)");
  const std::size_t n = A.cols();
  const auto red = rref(A.augment(Matrix::column_vector(b)), backend, seed);

  SolutionSet out;
  out.backend_stats = red.backend_stats;
  out.consistent = red.pivot_cols.empty() || red.pivot_cols.back() != n;

  std::vector<bool> is_pivot(n, false);
  std::vector<std::size_t> pivots;
  for (std::size_t c : red.pivot_cols)
    if (c < n) {
      is_pivot[c] = true;
      pivots.push_back(c);
    }

  if (out.consistent) {
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = red.rref.at(i, n);
    out.particular = std::move(x);
  }

  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(n);
    v[f] = Rational(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -red.rref.at(i, f);
    out.nullspace_basis.push_back(std::move(v));
  }
  return out;
}

}  // namespace qnr::exact
