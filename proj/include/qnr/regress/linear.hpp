#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qnr/errors.hpp"
#include "qnr/exact/elimination.hpp"
#include "qnr/exact/pseudoinverse.hpp"
#include "qnr/real_matrix.hpp"
#include "qnr/regress/band.hpp"
#include "qnr/regress/rationalize.hpp"
#include "qnr/stats/f_distribution.hpp"

namespace qnr::regress {

// Observations for the global linear model: an n x p design and an n-vector
// response.
struct Dataset {
  RealMatrix design;
  std::vector<double> response;

  Dataset(RealMatrix x, std::vector<double> y) : design(std::move(x)), response(std::move(y)) {
    if (design.rows() != response.size())
      throw std::invalid_argument("Dataset: rows(design) != length(response)");
  }

  std::size_t n() const { return design.rows(); }
  std::size_t p() const { return design.cols(); }
};

struct FitResult {
  std::vector<double> beta_hat;
  std::optional<double> sigma2_hat;  // absent when n <= rank
  std::vector<double> residuals;     // response - design * beta_hat
  double effective_dof = 0.0;        // trace of the projection matrix
  std::size_t rank = 0;              // rank of the quantized normal matrix
  bool used_pseudoinverse = false;
  exact::PivotStats backend_stats;
};

namespace detail {

inline RealMatrix normal_matrix(const Dataset& data) {
  const std::size_t n = data.n(), p = data.p();
  RealMatrix m(p, p);
  for (std::size_t a = 0; a < p; ++a)
    for (std::size_t b = a; b < p; ++b) {
      double s = 0.0;
      for (std::size_t i = 0; i < n; ++i) s += data.design.at(i, a) * data.design.at(i, b);
      m.at(a, b) = s;
      m.at(b, a) = s;
    }
  return m;
}

inline std::vector<double> normal_rhs(const Dataset& data) {
  const std::size_t n = data.n(), p = data.p();
  std::vector<double> v(p, 0.0);
  for (std::size_t a = 0; a < p; ++a)
    for (std::size_t i = 0; i < n; ++i) v[a] += data.design.at(i, a) * data.response[i];
  return v;
}

// Double-valued pseudoinverse of the quantized normal matrix; the exact pinv
// of a symmetric matrix is symmetric, so this is too.
inline RealMatrix normal_pinv(const Dataset& data) {
  return to_real(exact::pseudoinverse(rationalize(normal_matrix(data))));
}

inline std::vector<double> matvec_rational(const exact::Matrix& m,
                                           const std::vector<exact::Rational>& v) {
  std::vector<double> out(m.rows(), 0.0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    exact::Rational acc;
    for (std::size_t c = 0; c < m.cols(); ++c) acc += m.at(r, c) * v[c];
    out[r] = acc.to_double();
  }
  return out;
}

}  // namespace detail

// Least-squares fit via the normal equations (X^T X) beta = X^T Y, solved
// exactly after quantization.  A singular normal matrix falls back to the
// Moore-Penrose pseudoinverse, giving the minimum-norm solution.
inline FitResult fit_linear(const Dataset& data, exact::PivotBackend backend,
                            std::uint64_t seed) {
  const std::size_t n = data.n(), p = data.p();

  const exact::Matrix m = rationalize(detail::normal_matrix(data));
  const auto v = rationalize(detail::normal_rhs(data));

  FitResult fit;
  const auto sol = exact::solve(m, v, backend, seed);
  fit.backend_stats = sol.backend_stats;
  fit.rank = p - sol.nullspace_basis.size();

  if (fit.rank == p) {
    fit.beta_hat = to_real(*sol.particular);
  } else {
    fit.used_pseudoinverse = true;
    fit.beta_hat = detail::matvec_rational(
        exact::pseudoinverse(m, backend, derive_seed(seed, p + 1), &fit.backend_stats), v);
  }

  fit.residuals.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    double yhat = 0.0;
    for (std::size_t j = 0; j < p; ++j) yhat += data.design.at(i, j) * fit.beta_hat[j];
    fit.residuals[i] = data.response[i] - yhat;
  }

  // effective dof = tr(X (X^T X)+ X^T), computed row by row
  const RealMatrix minv = detail::normal_pinv(data);
  double dof = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto xi = data.design.row(i);
    const auto t = minv.mul_vec(xi);
    for (std::size_t j = 0; j < p; ++j) dof += xi[j] * t[j];
  }
  fit.effective_dof = dof;

  if (n > fit.rank) {
    double ssr = 0.0;
    for (double r : fit.residuals) ssr += r * r;
    fit.sigma2_hat = ssr / static_cast<double>(n - fit.rank);
  }
  return fit;
}

// ||residuals||^2 / (n - p); the unbiased noise-variance estimate.
inline double residual_variance(const FitResult& fit, std::size_t n, std::size_t p) {
  if (n <= p) throw DegreesOfFreedomError("residual_variance: requires n > p");
  double ssr = 0.0;
  for (double r : fit.residuals) ssr += r * r;
  return ssr / static_cast<double>(n - p);
}

// Smoother vector ell(x) with ell(x)^T Y = x^T beta_hat for every Y:
// ell(x) = X (X^T X)+ x.
inline std::vector<double> smoother_vector(const Dataset& data, const std::vector<double>& x,
                                           exact::PivotBackend backend = exact::PivotBackend::Classical,
                                           std::uint64_t seed = 0) {
  if (x.size() != data.p())
    throw std::invalid_argument("smoother_vector: query size != predictor count");
  const exact::Matrix m = rationalize(detail::normal_matrix(data));
  const RealMatrix minv = to_real(exact::pseudoinverse(m, backend, seed));
  const auto t = minv.mul_vec(x);
  return data.design.mul_vec(t);
}

// Projection matrix L = X (X^T X)+ X^T and its trace.  L is symmetric and
// idempotent; the trace is the effective degrees of freedom.
inline std::pair<RealMatrix, double> hat_matrix(const Dataset& data) {
  const RealMatrix minv = detail::normal_pinv(data);
  const RealMatrix xt = data.design.transpose();
  const RealMatrix l = data.design * (minv * xt);
  return {l, l.trace()};
}

// 1 - alpha confidence band over the grid: at each point the center is
// ell(x)^T Y and the half-width c * sigma_hat * ||ell(x)|| with
// c = sqrt(nu * F_quantile(alpha; nu, n - nu)), nu the fitted rank (equal to
// the predictor count for full-rank designs).
inline ConfidenceBand confidence_band(const Dataset& data, const FitResult& fit,
                                      const std::vector<std::vector<double>>& grid,
                                      double alpha,
                                      exact::PivotBackend backend = exact::PivotBackend::Classical) {
  (void)backend;  // pivot choice cannot change the band; kept for interface symmetry
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("confidence_band: alpha must be in (0, 1)");
  const std::size_t n = data.n();
  const std::size_t nu = fit.rank;  // equals p for full-rank designs
  if (n <= data.p() || !fit.sigma2_hat)
    throw DegreesOfFreedomError("confidence_band: requires n > p");

  const double c = std::sqrt(static_cast<double>(nu) *
                             stats::f_quantile(alpha, static_cast<int>(nu),
                                               static_cast<int>(n - nu)));
  const double sigma = std::sqrt(*fit.sigma2_hat);
  const RealMatrix minv = detail::normal_pinv(data);

  ConfidenceBand band;
  band.alpha = alpha;
  band.c = c;
  band.grid = grid;
  band.lower.reserve(grid.size());
  band.center.reserve(grid.size());
  band.upper.reserve(grid.size());
  for (const auto& x : grid) {
    if (x.size() != data.p())
      throw std::invalid_argument("confidence_band: grid point size != predictor count");
    const auto ell = data.design.mul_vec(minv.mul_vec(x));
    double center = 0.0, norm2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      center += ell[i] * data.response[i];
      norm2 += ell[i] * ell[i];
    }
    const double hw = c * sigma * std::sqrt(norm2);
    band.lower.push_back(center - hw);
    band.center.push_back(center);
    band.upper.push_back(center + hw);
  }
  return band;
}

}  // namespace qnr::regress
