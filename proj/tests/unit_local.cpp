#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdint>
#include <vector>

#include "qnr/errors.hpp"
#include "qnr/regress/local.hpp"
#include "qnr/rng.hpp"

using qnr::Rng;
using qnr::exact::PivotBackend;
using qnr::regress::default_bandwidth;
using qnr::regress::KernelFamily;
using qnr::regress::KernelSpec;
using qnr::regress::kernel_weight;
using qnr::regress::local_band;
using qnr::regress::local_design;
using qnr::regress::local_fit;
using qnr::regress::nadaraya_watson;

namespace {

struct Sample {
  std::vector<double> xs, ys;
};

Sample sampled(std::size_t n, double lo, double hi, double (*f)(double)) {
  Sample s;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    s.xs.push_back(x);
    s.ys.push_back(f(x));
  }
  return s;
}

double quadratic(double x) { return 1.0 + 0.5 * x - 0.25 * x * x; }
double line(double x) { return 3.0 - 2.0 * x; }

}  // namespace

TEST_CASE("kernel weights at reference distances") {
  const KernelSpec gauss(KernelFamily::Gaussian, 2.0);
  REQUIRE(kernel_weight(gauss, 0.0) == 1.0);
  REQUIRE(kernel_weight(gauss, 2.0) == Catch::Approx(std::exp(-0.5)).margin(1e-12));
  REQUIRE(kernel_weight(gauss, 2.0) == Catch::Approx(0.60653066).margin(1e-7));

  const KernelSpec epan(KernelFamily::Epanechnikov, 1.0);
  REQUIRE(epan.bandwidth == 1.0);
  REQUIRE(kernel_weight(epan, 0.0) == 0.75);
  REQUIRE(kernel_weight(epan, 0.5) == Catch::Approx(0.5625).margin(1e-12));
  REQUIRE(kernel_weight(epan, 1.5) == 0.0);

  const KernelSpec box(KernelFamily::Boxcar, 1.0);
  REQUIRE(kernel_weight(box, 0.999) == 1.0);
  REQUIRE(kernel_weight(box, 1.0) == 1.0);
  REQUIRE(kernel_weight(box, 1.001) == 0.0);

  REQUIRE_THROWS_AS(KernelSpec(KernelFamily::Gaussian, 0.0), std::invalid_argument);
  REQUIRE_THROWS_AS(KernelSpec(KernelFamily::Gaussian, -1.0), std::invalid_argument);
}

TEST_CASE("normal-reference bandwidth") {
  const std::vector<double> xs{1.0, 2.0, 3.0, 4.0};
  const double sd = std::sqrt(5.0 / 3.0);
  REQUIRE(default_bandwidth(xs) ==
          Catch::Approx(1.06 * sd * std::pow(4.0, -0.2)).margin(1e-12));
  REQUIRE(default_bandwidth({2.0}) == 1.0);
  REQUIRE(default_bandwidth({3.0, 3.0, 3.0}) == 1.0);
  REQUIRE(default_bandwidth({}) == 1.0);
}

TEST_CASE("taylor design rows divide by the factorial") {
  const KernelSpec spec(KernelFamily::Gaussian, 1.0);
  const auto ld = local_design({3.0}, 1.0, 2, spec);
  REQUIRE(ld.design.at(0, 0) == 1.0);
  REQUIRE(ld.design.at(0, 1) == Catch::Approx(2.0).margin(1e-15));
  REQUIRE(ld.design.at(0, 2) == Catch::Approx(2.0).margin(1e-15));
  REQUIRE(ld.weights[0] == Catch::Approx(std::exp(-2.0)).margin(1e-12));
  REQUIRE_THROWS_AS(local_design({}, 0.0, 1, spec), std::invalid_argument);
}

TEST_CASE("local quadratic reproduces a quadratic and its derivatives") {
  const auto s = sampled(30, 0.0, 3.0, quadratic);
  const KernelSpec spec(KernelFamily::Gaussian, 0.8);
  for (int g = 0; g < 20; ++g) {
    const double x = 0.2 + 2.6 * static_cast<double>(g) / 19.0;
    const auto fit = local_fit(s.xs, s.ys, x, 2, spec);
    REQUIRE(fit.r_hat == Catch::Approx(quadratic(x)).margin(1e-8));
    REQUIRE(fit.a_hat[1] == Catch::Approx(0.5 - 0.5 * x).margin(1e-6));
    REQUIRE(fit.a_hat[2] == Catch::Approx(-0.5).margin(1e-6));
  }
}

TEST_CASE("local linear reproduces a line") {
  const auto s = sampled(25, -1.0, 2.0, line);
  const KernelSpec spec(KernelFamily::Epanechnikov, 0.9);
  for (int g = 0; g < 15; ++g) {
    const double x = -0.8 + 2.6 * static_cast<double>(g) / 14.0;
    const auto fit = local_fit(s.xs, s.ys, x, 1, spec);
    REQUIRE(fit.r_hat == Catch::Approx(line(x)).margin(1e-8));
    REQUIRE(fit.a_hat[1] == Catch::Approx(-2.0).margin(1e-6));
  }
}

TEST_CASE("degree zero equals the kernel-weighted mean") {
  Rng rng(61);
  std::vector<double> xs, ys;
  for (int i = 0; i < 40; ++i) {
    xs.push_back(3.0 * rng.uniform_double());
    ys.push_back(2.0 * rng.uniform_double() - 1.0);
  }
  const KernelSpec spec(KernelFamily::Gaussian, 0.5);
  for (int g = 0; g < 100; ++g) {
    const double x = 3.0 * rng.uniform_double();
    const auto fit = local_fit(xs, ys, x, 0, spec);
    REQUIRE(fit.r_hat == Catch::Approx(nadaraya_watson(xs, ys, x, spec)).margin(1e-12));
  }
}

TEST_CASE("two-point weighted mean worked example") {
  const KernelSpec spec(KernelFamily::Gaussian, 1.0);
  const double w = std::exp(-0.5);
  REQUIRE(nadaraya_watson({0.0, 1.0}, {0.0, 1.0}, 0.0, spec) ==
          Catch::Approx(w / (1.0 + w)).margin(1e-12));
  REQUIRE(nadaraya_watson({0.0, 1.0}, {0.0, 1.0}, 0.0, spec) ==
          Catch::Approx(0.377541).margin(1e-6));
}

TEST_CASE("smoother vector reproduces the fitted value and sums to one") {
  const auto s = sampled(20, 0.0, 2.0, quadratic);
  const KernelSpec spec(KernelFamily::Gaussian, 0.6);
  const auto fit = local_fit(s.xs, s.ys, 0.7, 1, spec);

  double via_ell = 0.0, total = 0.0;
  for (std::size_t i = 0; i < s.xs.size(); ++i) {
    via_ell += fit.ell[i] * s.ys[i];
    total += fit.ell[i];
  }
  REQUIRE(via_ell == Catch::Approx(fit.r_hat).margin(1e-9));
  REQUIRE(total == Catch::Approx(1.0).margin(1e-9));
}

TEST_CASE("compact kernels zero the smoother outside the bandwidth") {
  const auto s = sampled(21, 0.0, 2.0, line);
  for (auto family : {KernelFamily::Epanechnikov, KernelFamily::Boxcar}) {
    const KernelSpec spec(family, 0.3);
    const auto fit = local_fit(s.xs, s.ys, 1.0, 1, spec);
    for (std::size_t i = 0; i < s.xs.size(); ++i) {
      if (std::abs(s.xs[i] - 1.0) > 0.3) {
        REQUIRE(fit.ell[i] == 0.0);  // exactly, not approximately
      }
    }
  }
}

TEST_CASE("empty neighborhoods are reported") {
  const KernelSpec spec(KernelFamily::Boxcar, 0.1);
  REQUIRE_THROWS_AS(local_fit({0.0, 1.0}, {1.0, 2.0}, 5.0, 1, spec),
                    qnr::EmptyNeighborhoodError);
  REQUIRE_THROWS_AS(nadaraya_watson({0.0, 1.0}, {1.0, 2.0}, 5.0, spec),
                    qnr::EmptyNeighborhoodError);
}

TEST_CASE("input validation") {
  const KernelSpec spec(KernelFamily::Gaussian, 1.0);
  REQUIRE_THROWS_AS(local_fit({1.0, 2.0}, {1.0}, 0.5, 1, spec), std::invalid_argument);
  REQUIRE_THROWS_AS(nadaraya_watson({1.0, 2.0}, {1.0}, 0.5, spec), std::invalid_argument);
  REQUIRE_THROWS_AS(local_band({1.0, 2.0}, {1.0}, {0.5}, 1, spec, 0.05), std::invalid_argument);
  REQUIRE_THROWS_AS(local_band({1.0, 2.0}, {1.0, 2.0}, {0.5}, 1, spec, 1.5),
                    std::invalid_argument);
}

TEST_CASE("both backends produce the identical local fit") {
  const auto s = sampled(16, 0.0, 2.0, quadratic);
  const KernelSpec spec(KernelFamily::Gaussian, 0.7);
  const auto classical = local_fit(s.xs, s.ys, 0.9, 1, spec, PivotBackend::Classical, 0);
  const auto quantum = local_fit(s.xs, s.ys, 0.9, 1, spec, PivotBackend::QuantumSim, 77);
  REQUIRE(quantum.r_hat == classical.r_hat);
  for (std::size_t i = 0; i < s.xs.size(); ++i)
    REQUIRE(quantum.ell[i] == classical.ell[i]);
  REQUIRE(quantum.backend_stats.grover_searches > 0);
}

TEST_CASE("band collapses on noiseless polynomial data") {
  const auto s = sampled(25, 0.0, 2.0, line);
  const KernelSpec spec(KernelFamily::Gaussian, 0.5);
  const auto result = local_band(s.xs, s.ys, {0.3, 1.0, 1.7}, 1, spec, 0.05);
  REQUIRE(result.sigma2_hat < 1e-16);
  for (std::size_t g = 0; g < 3; ++g) {
    REQUIRE(result.band.upper[g] - result.band.lower[g] < 1e-6);
    REQUIRE(result.band.center[g] == Catch::Approx(line(result.band.grid[g][0])).margin(1e-8));
  }
}

TEST_CASE("band structure on noisy data") {
  Rng rng(83);
  std::vector<double> xs, ys;
  for (int i = 0; i < 40; ++i) {
    const double x = static_cast<double>(i) / 39.0 * 3.0;
    xs.push_back(x);
    ys.push_back(std::sin(x) + 0.3 * rng.normal());
  }
  const KernelSpec spec(KernelFamily::Gaussian, 0.6);
  const std::vector<double> grid{0.5, 1.5, 2.5};

  const auto tight = local_band(xs, ys, grid, 1, spec, 0.10);
  const auto wide = local_band(xs, ys, grid, 1, spec, 0.01);

  REQUIRE(tight.nu >= 1);
  REQUIRE(tight.effective_dof > 0.0);
  REQUIRE(tight.effective_dof < 40.0);
  for (std::size_t g = 0; g < grid.size(); ++g) {
    REQUIRE(tight.band.grid[g] == std::vector<double>{grid[g]});
    REQUIRE(tight.band.lower[g] < tight.band.center[g]);
    REQUIRE(tight.band.center[g] < tight.band.upper[g]);
    REQUIRE(wide.band.upper[g] - wide.band.lower[g] >
            tight.band.upper[g] - tight.band.lower[g]);
    REQUIRE(wide.band.center[g] == Catch::Approx(tight.band.center[g]).margin(1e-12));
  }
}

TEST_CASE("saturated local smoothing is a degrees-of-freedom error") {
  const KernelSpec spec(KernelFamily::Boxcar, 10.0);
  REQUIRE_THROWS_AS(local_band({0.0, 1.0}, {1.0, 2.0}, {0.5}, 1, spec, 0.05),
                    qnr::DegreesOfFreedomError);
}
