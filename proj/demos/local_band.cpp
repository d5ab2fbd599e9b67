// Fits a local linear smoother to a noisy sinusoid and prints the confidence
// band over a coarse grid.
#include <cmath>
#include <cstdio>
#include <vector>

#include "qnr/regress/local.hpp"
#include "qnr/rng.hpp"

int main() {
  using namespace qnr::regress;

  qnr::Rng rng(2024);
  const std::size_t n = 60;
  std::vector<double> xs(n), ys(n);
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = 6.28 * static_cast<double>(i) / static_cast<double>(n - 1);
    ys[i] = std::sin(xs[i]) + 0.25 * rng.normal();
  }

  const KernelSpec spec(KernelFamily::Gaussian, default_bandwidth(xs));
  std::vector<double> grid;
  for (int g = 0; g <= 12; ++g) grid.push_back(6.28 * g / 12.0);

  const auto result = local_band(xs, ys, grid, 1, spec, 0.05);
  std::printf("bandwidth %.4f, effective dof %.2f, sigma2 %.4f, c %.4f\n", spec.bandwidth,
              result.effective_dof, result.sigma2_hat, result.band.c);
  std::printf("%8s %10s %10s %10s %10s\n", "x", "lower", "center", "upper", "truth");
  for (std::size_t g = 0; g < grid.size(); ++g)
    std::printf("%8.3f %10.4f %10.4f %10.4f %10.4f\n", grid[g], result.band.lower[g],
                result.band.center[g], result.band.upper[g], std::sin(grid[g]));
  return 0;
}
