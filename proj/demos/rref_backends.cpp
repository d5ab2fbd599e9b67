// Runs the same elimination on both pivot-search backends and shows that the
// reduced form and pivot columns agree while the search statistics differ.
#include <cstdio>

#include "qnr/exact/elimination.hpp"

using qnr::exact::Matrix;
using qnr::exact::PivotBackend;
using qnr::exact::Rational;

static void show(const char* label, const qnr::exact::RrefResult& result) {
  std::printf("%s\n", label);
  std::printf("  rank %zu, pivots:", result.rank);
  for (std::size_t c : result.pivot_cols) std::printf(" %zu", c);
  std::printf("\n");
  for (std::size_t r = 0; r < result.rref.rows(); ++r) {
    std::printf("  ");
    for (std::size_t c = 0; c < result.rref.cols(); ++c)
      std::printf("%8s", result.rref.at(r, c).str().c_str());
    std::printf("\n");
  }
  const auto& s = result.backend_stats;
  std::printf("  comparisons %llu, oracle calls %llu, grover rounds %llu\n\n",
              (unsigned long long)s.comparisons, (unsigned long long)s.oracle_calls,
              (unsigned long long)s.grover_rounds);
}

int main() {
  const Matrix m = Matrix::from_rows({
      {Rational(0), Rational(2), Rational(4), Rational(2)},
      {Rational(1), Rational(1), Rational(3), Rational(5)},
      {Rational(2), Rational(2), Rational(6), Rational(10)},
  });

  show("classical pivot scan", qnr::exact::rref(m, PivotBackend::Classical, 7));
  show("simulated Grover pivot search", qnr::exact::rref(m, PivotBackend::QuantumSim, 7));
  return 0;
}
