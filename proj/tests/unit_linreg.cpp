#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdint>
#include <vector>

#include "qnr/errors.hpp"
#include "qnr/regress/linear.hpp"
#include "qnr/rng.hpp"
#include "support.hpp"

using qnr::RealMatrix;
using qnr::Rng;
using qnr::exact::PivotBackend;
using qnr::regress::confidence_band;
using qnr::regress::Dataset;
using qnr::regress::fit_linear;
using qnr::regress::hat_matrix;
using qnr::regress::residual_variance;
using qnr::regress::smoother_vector;
using qnr::regress::training_accept;

namespace {

Dataset line_dataset() {
  // intercept plus x in {1, 2, 3}; responses chosen so beta = (2/3, 1/2)
  RealMatrix x(3, 2, {1, 1, 1, 2, 1, 3});
  return Dataset(std::move(x), {1.0, 2.0, 2.0});
}

Dataset noisy_line(Rng& rng, std::size_t n) {
  RealMatrix x(n, 2);
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(n - 1);
    x.at(i, 0) = 1.0;
    x.at(i, 1) = t;
    y[i] = 1.0 + 2.0 * t + rng.normal();
  }
  return Dataset(std::move(x), std::move(y));
}

}  // namespace

TEST_CASE("dataset validates its shapes") {
  REQUIRE_THROWS_AS(Dataset(RealMatrix(3, 2), {1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("a perfectly linear response is reproduced with zero variance") {
  RealMatrix x(3, 2, {1, 0, 1, 1, 1, 2});
  const Dataset data(std::move(x), {0.0, 2.0, 4.0});
  const auto fit = fit_linear(data, PivotBackend::Classical, 0);
  REQUIRE(fit.rank == 2);
  REQUIRE_FALSE(fit.used_pseudoinverse);
  REQUIRE(fit.beta_hat[0] == Catch::Approx(0.0).margin(1e-9));
  REQUIRE(fit.beta_hat[1] == Catch::Approx(2.0).margin(1e-9));
  REQUIRE(fit.sigma2_hat.has_value());
  REQUIRE(*fit.sigma2_hat == Catch::Approx(0.0).margin(1e-15));
}

TEST_CASE("worked least-squares example is exact") {
  const auto data = line_dataset();
  const auto fit = fit_linear(data, PivotBackend::Classical, 0);
  REQUIRE(fit.beta_hat[0] == Catch::Approx(2.0 / 3.0).margin(1e-12));
  REQUIRE(fit.beta_hat[1] == Catch::Approx(0.5).margin(1e-12));
  REQUIRE(fit.residuals[0] == Catch::Approx(-1.0 / 6.0).margin(1e-12));
  REQUIRE(fit.residuals[1] == Catch::Approx(1.0 / 3.0).margin(1e-12));
  REQUIRE(fit.residuals[2] == Catch::Approx(-1.0 / 6.0).margin(1e-12));
  REQUIRE(*fit.sigma2_hat == Catch::Approx(1.0 / 6.0).margin(1e-12));
  REQUIRE(fit.effective_dof == Catch::Approx(2.0).margin(1e-9));
  REQUIRE(residual_variance(fit, 3, 2) == Catch::Approx(1.0 / 6.0).margin(1e-12));
}

TEST_CASE("residual variance refuses saturated fits") {
  const auto data = line_dataset();
  const auto fit = fit_linear(data, PivotBackend::Classical, 0);
  REQUIRE_THROWS_AS(residual_variance(fit, 2, 2), qnr::DegreesOfFreedomError);
}

TEST_CASE("a duplicated column falls back to the minimum-norm solution") {
  RealMatrix x(3, 2, {1, 1, 2, 2, 3, 3});
  const Dataset data(std::move(x), {1.0, 2.0, 2.0});
  const auto fit = fit_linear(data, PivotBackend::Classical, 0);
  REQUIRE(fit.used_pseudoinverse);
  REQUIRE(fit.rank == 1);
  REQUIRE(fit.beta_hat[0] == Catch::Approx(11.0 / 28.0).margin(1e-9));
  REQUIRE(fit.beta_hat[1] == Catch::Approx(11.0 / 28.0).margin(1e-9));
  REQUIRE(fit.effective_dof == Catch::Approx(1.0).margin(1e-9));
}

TEST_CASE("both backends produce the identical fit") {
  Rng rng(5);
  const auto x = test_support::random_design(rng, 10, 3);
  std::vector<double> y(10);
  for (auto& v : y) v = rng.normal();
  const Dataset data(x, y);

  const auto classical = fit_linear(data, PivotBackend::Classical, 0);
  const auto quantum = fit_linear(data, PivotBackend::QuantumSim, 42);
  for (std::size_t j = 0; j < 3; ++j)
    REQUIRE(quantum.beta_hat[j] == classical.beta_hat[j]);
  REQUIRE(quantum.rank == classical.rank);
  REQUIRE(quantum.backend_stats.grover_searches > 0);
  REQUIRE(classical.backend_stats.grover_searches == 0);
}

TEST_CASE("normal equations hold to quantization accuracy") {
  Rng rng(17);
  for (int t = 0; t < 10; ++t) {
    const auto x = test_support::random_design(rng, 12, 3);
    std::vector<double> y(12);
    for (auto& v : y) v = 3.0 * rng.uniform_double() - 1.0;
    const Dataset data(x, y);
    const auto fit = fit_linear(data, PivotBackend::Classical, 0);
    REQUIRE(fit.rank == 3);

    for (std::size_t a = 0; a < 3; ++a) {
      double lhs = 0.0, rhs = 0.0;
      for (std::size_t i = 0; i < 12; ++i) {
        double xb = 0.0;
        for (std::size_t b = 0; b < 3; ++b) xb += x.at(i, b) * fit.beta_hat[b];
        lhs += x.at(i, a) * xb;
        rhs += x.at(i, a) * y[i];
      }
      REQUIRE(lhs == Catch::Approx(rhs).margin(1e-8));
    }
  }
}

TEST_CASE("smoother vectors reproduce fitted values") {
  const auto data = line_dataset();
  const auto fit = fit_linear(data, PivotBackend::Classical, 0);

  for (std::size_t i = 0; i < data.n(); ++i) {
    const auto ell = smoother_vector(data, data.design.row(i));
    double value = 0.0;
    for (std::size_t j = 0; j < data.n(); ++j) value += ell[j] * data.response[j];
    double fitted = 0.0;
    for (std::size_t k = 0; k < data.p(); ++k)
      fitted += data.design.at(i, k) * fit.beta_hat[k];
    REQUIRE(value == Catch::Approx(fitted).margin(1e-9));
  }
  REQUIRE_THROWS_AS(smoother_vector(data, {1.0}), std::invalid_argument);
}

TEST_CASE("intercept-only smoothing averages the sample") {
  RealMatrix ones(5, 1, {1, 1, 1, 1, 1});
  const Dataset data(std::move(ones), {1.0, 2.0, 3.0, 4.0, 5.0});
  const auto ell = smoother_vector(data, {1.0});
  for (double w : ell) REQUIRE(w == Catch::Approx(0.2).margin(1e-12));
}

TEST_CASE("smoothing is linear in the response for random responses") {
  Rng rng(29);
  const auto x = test_support::random_design(rng, 8, 2);
  const std::vector<double> query{1.0, 0.3};

  for (int t = 0; t < 20; ++t) {
    std::vector<double> y(8);
    for (auto& v : y) v = 2.0 * rng.uniform_double() - 1.0;
    const Dataset data(x, y);
    const auto fit = fit_linear(data, PivotBackend::Classical, 0);
    const auto ell = smoother_vector(data, query);

    double via_ell = 0.0;
    for (std::size_t i = 0; i < 8; ++i) via_ell += ell[i] * y[i];
    const double via_beta = fit.beta_hat[0] * query[0] + fit.beta_hat[1] * query[1];
    REQUIRE(via_ell == Catch::Approx(via_beta).margin(1e-9));
  }
}

TEST_CASE("hat matrix of explicit designs") {
  RealMatrix eye(3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1});
  const Dataset identity_data(std::move(eye), {1.0, 2.0, 3.0});
  const auto [l_eye, tr_eye] = hat_matrix(identity_data);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c)
      REQUIRE(l_eye.at(r, c) == Catch::Approx(r == c ? 1.0 : 0.0).margin(1e-9));
  REQUIRE(tr_eye == Catch::Approx(3.0).margin(1e-9));

  RealMatrix ones(4, 1, {1, 1, 1, 1});
  const Dataset mean_data(std::move(ones), {1.0, 1.0, 1.0, 1.0});
  const auto [l_mean, tr_mean] = hat_matrix(mean_data);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c)
      REQUIRE(l_mean.at(r, c) == Catch::Approx(0.25).margin(1e-12));
  REQUIRE(tr_mean == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("hat matrix is a symmetric idempotent projection") {
  Rng rng(31);
  const auto x = test_support::random_design(rng, 10, 3);
  std::vector<double> y(10, 0.0);
  const Dataset data(x, y);
  const auto [l, tr] = hat_matrix(data);

  REQUIRE(tr == Catch::Approx(3.0).margin(1e-9));
  const RealMatrix ll = l * l;
  for (std::size_t r = 0; r < 10; ++r)
    for (std::size_t c = 0; c < 10; ++c) {
      REQUIRE(l.at(r, c) == Catch::Approx(l.at(c, r)).margin(1e-9));
      REQUIRE(ll.at(r, c) == Catch::Approx(l.at(r, c)).margin(1e-9));
    }
}

TEST_CASE("variance estimate is unbiased under simulation") {
  Rng rng(101);
  double total = 0.0;
  const int sims = 300;
  for (int s = 0; s < sims; ++s) {
    const auto data = noisy_line(rng, 30);
    const auto fit = fit_linear(data, PivotBackend::Classical, 0);
    total += *fit.sigma2_hat;
  }
  REQUIRE(total / sims == Catch::Approx(1.0).margin(0.1));
}

TEST_CASE("confidence band on the worked example") {
  const auto data = line_dataset();
  const auto fit = fit_linear(data, PivotBackend::Classical, 0);
  const std::vector<std::vector<double>> grid{{1.0, 1.0}, {1.0, 2.0}, {1.0, 3.0}};
  const auto band = confidence_band(data, fit, grid, 0.05);

  // nu = 2, n - nu = 1: F(0.05; 2, 1) = 199.5, c = sqrt(399)
  REQUIRE(band.c == Catch::Approx(std::sqrt(399.0)).margin(1e-3));
  REQUIRE(band.size() == 3);
  for (std::size_t g = 0; g < 3; ++g) {
    const double fitted = fit.beta_hat[0] + fit.beta_hat[1] * grid[g][1];
    REQUIRE(band.center[g] == Catch::Approx(fitted).margin(1e-9));
    REQUIRE(band.lower[g] < band.center[g]);
    REQUIRE(band.upper[g] > band.center[g]);
    REQUIRE(band.upper[g] - band.center[g] ==
            Catch::Approx(band.center[g] - band.lower[g]).margin(1e-9));
  }
}

TEST_CASE("critical constant for a routine design size") {
  Rng rng(7);
  const auto data = noisy_line(rng, 12);
  const auto fit = fit_linear(data, PivotBackend::Classical, 0);
  const auto band = confidence_band(data, fit, {{1.0, 0.5}}, 0.05);
  // nu = 2, n - nu = 10: F(0.05; 2, 10) = 4.1028, c = sqrt(2 * 4.1028)
  REQUIRE(band.c == Catch::Approx(2.8646).margin(1e-3));
}

TEST_CASE("band width shrinks as alpha grows") {
  Rng rng(13);
  const auto data = noisy_line(rng, 20);
  const auto fit = fit_linear(data, PivotBackend::Classical, 0);
  const std::vector<std::vector<double>> grid{{1.0, 0.25}, {1.0, 0.75}};
  const auto tight = confidence_band(data, fit, grid, 0.10);
  const auto wide = confidence_band(data, fit, grid, 0.01);
  for (std::size_t g = 0; g < grid.size(); ++g) {
    REQUIRE(wide.upper[g] - wide.lower[g] > tight.upper[g] - tight.lower[g]);
    REQUIRE(wide.center[g] == Catch::Approx(tight.center[g]).margin(1e-12));
  }
}

TEST_CASE("band validation") {
  const auto data = line_dataset();
  const auto fit = fit_linear(data, PivotBackend::Classical, 0);
  REQUIRE_THROWS_AS(confidence_band(data, fit, {{1.0, 1.0}}, 0.0), std::invalid_argument);
  REQUIRE_THROWS_AS(confidence_band(data, fit, {{1.0, 1.0}}, 1.0), std::invalid_argument);
  REQUIRE_THROWS_AS(confidence_band(data, fit, {{1.0}}, 0.05), std::invalid_argument);

  RealMatrix square(2, 2, {1, 0, 1, 1});
  const Dataset saturated(std::move(square), {1.0, 2.0});
  const auto sat_fit = fit_linear(saturated, PivotBackend::Classical, 0);
  REQUIRE_THROWS_AS(confidence_band(saturated, sat_fit, {{1.0, 0.5}}, 0.05),
                    qnr::DegreesOfFreedomError);
}

TEST_CASE("training rule accepts exactly the closed band interval") {
  qnr::regress::ConfidenceBand band;
  band.grid = {{0.0}};
  band.lower = {-1.0};
  band.center = {0.0};
  band.upper = {2.0};
  REQUIRE(training_accept(-1.0, band, 0));
  REQUIRE(training_accept(2.0, band, 0));
  REQUIRE(training_accept(0.5, band, 0));
  REQUIRE_FALSE(training_accept(-1.0000001, band, 0));
  REQUIRE_FALSE(training_accept(2.0000001, band, 0));
  REQUIRE_THROWS_AS(training_accept(0.0, band, 1), std::out_of_range);
}
