#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <vector>

#include "qnr/real_matrix.hpp"
#include "qnr/regress/linear.hpp"
#include "qnr/rng.hpp"

namespace qnr::regress {

// Empirical pointwise coverage of the linear-fit band under a known truth.
struct CoverageReport {
  std::size_t replicates = 0;
  std::size_t n = 0;
  double alpha = 0.0;
  std::vector<double> grid;       // evaluation points in the predictor
  std::vector<std::size_t> hits;  // replicates whose band covered the truth
  std::vector<double> coverage;   // hits / replicates
};

namespace detail {

inline constexpr double kTrueIntercept = 1.0;
inline constexpr double kTrueSlope = 2.0;

inline double true_line(double x) { return kTrueIntercept + kTrueSlope * x; }

}  // namespace detail

// Replicated synthetic experiment: data y_i = 1 + 2 x_i + N(0,1) noise on an
// equally spaced unit-interval design, one linear fit and band per replicate,
// counting how often the band covers the true line at each grid point.
// Replicate i draws its noise from seed + i, and hits are integer sums, so
// the result is independent of how replicates are distributed over threads.
inline CoverageReport simulate_coverage(std::size_t replicates, std::size_t n, double alpha,
                                        std::uint64_t seed,
                                        exact::PivotBackend backend = exact::PivotBackend::Classical,
                                        unsigned threads = 0) {
  if (replicates == 0) throw std::invalid_argument("simulate_coverage: replicates must be positive");
  if (n < 3) throw std::invalid_argument("simulate_coverage: n must be at least 3");
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("simulate_coverage: alpha must be in (0, 1)");

  CoverageReport report;
  report.replicates = replicates;
  report.n = n;
  report.alpha = alpha;
  report.grid = {0.0, 0.25, 0.5, 0.75, 1.0};

  RealMatrix design(n, 2);
  std::vector<double> xs(n);
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = static_cast<double>(i) / static_cast<double>(n - 1);
    design.at(i, 0) = 1.0;
    design.at(i, 1) = xs[i];
  }
  std::vector<std::vector<double>> grid_points;
  for (double g : report.grid) grid_points.push_back({1.0, g});

  if (threads == 0) {
    threads = std::max(1u, std::thread::hardware_concurrency());
  }
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, replicates));

  const std::size_t npts = report.grid.size();
  std::vector<std::vector<std::size_t>> partial(threads, std::vector<std::size_t>(npts, 0));

  auto worker = [&](unsigned t, std::size_t lo, std::size_t hi) {
    std::vector<double> ys(n);
    for (std::size_t rep = lo; rep < hi; ++rep) {
      Rng rng(derive_seed(seed, rep));
      for (std::size_t i = 0; i < n; ++i) ys[i] = detail::true_line(xs[i]) + rng.normal();
      Dataset data(design, ys);
      const auto fit = fit_linear(data, backend, derive_seed(seed, rep));
      const auto band = confidence_band(data, fit, grid_points, alpha, backend);
      for (std::size_t g = 0; g < npts; ++g) {
        const double truth = detail::true_line(report.grid[g]);
        if (band.lower[g] <= truth && truth <= band.upper[g]) ++partial[t][g];
      }
    }
  };

  std::vector<std::thread> pool;
  const std::size_t chunk = (replicates + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t lo = std::min<std::size_t>(t * chunk, replicates);
    const std::size_t hi = std::min<std::size_t>(lo + chunk, replicates);
    pool.emplace_back(worker, t, lo, hi);
  }
  for (auto& th : pool) th.join();

  report.hits.assign(npts, 0);
  report.coverage.assign(npts, 0.0);
  for (std::size_t g = 0; g < npts; ++g) {
    for (unsigned t = 0; t < threads; ++t) report.hits[g] += partial[t][g];
    report.coverage[g] = static_cast<double>(report.hits[g]) / static_cast<double>(replicates);
  }
  return report;
}

}  // namespace qnr::regress
