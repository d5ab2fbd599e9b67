#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "qnr/errors.hpp"
#include "qnr/exact/elimination.hpp"
#include "qnr/exact/pseudoinverse.hpp"
#include "qnr/real_matrix.hpp"
#include "qnr/regress/band.hpp"
#include "qnr/regress/rationalize.hpp"
#include "qnr/stats/f_distribution.hpp"

namespace qnr::regress {

enum class KernelFamily { Gaussian, Epanechnikov, Boxcar };

struct KernelSpec {
  KernelFamily family;
  double bandwidth;  // predictor units

  KernelSpec(KernelFamily f, double h) : family(f), bandwidth(h) {
    if (!(h > 0.0)) throw std::invalid_argument("KernelSpec: bandwidth must be positive");
  }
};

// Kernel value at the given distance from the center, with u = distance / h.
inline double kernel_weight(const KernelSpec& spec, double distance) {
  const double u = distance / spec.bandwidth;
  switch (spec.family) {
    case KernelFamily::Gaussian:
      return std::exp(-0.5 * u * u);
    case KernelFamily::Epanechnikov:
      return std::abs(u) <= 1.0 ? 0.75 * (1.0 - u * u) : 0.0;
    case KernelFamily::Boxcar:
      return std::abs(u) <= 1.0 ? 1.0 : 0.0;
  }
  throw std::invalid_argument("kernel_weight: unknown kernel family");
}

// Normal-reference bandwidth 1.06 * sd(xs) * n^(-1/5).  Degenerate inputs
// (constant predictor, fewer than two points) fall back to 1.0 so the spec
// stays constructible.
inline double default_bandwidth(const std::vector<double>& xs) {
  const std::size_t n = xs.size();
  if (n < 2) return 1.0;
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= static_cast<double>(n);
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  const double sd = std::sqrt(ss / static_cast<double>(n - 1));
  const double h = 1.06 * sd * std::pow(static_cast<double>(n), -0.2);
  return h > 0.0 ? h : 1.0;
}

// Taylor design about the query point: entry (i, j) = (x_i - x)^j / j!, plus
// the kernel weight of each observation.
struct LocalDesign {
  double center;
  std::size_t degree;
  RealMatrix design;            // n x (degree + 1)
  std::vector<double> weights;  // one per observation

  LocalDesign(double x, std::size_t p, std::size_t n)
      : center(x), degree(p), design(n, p + 1), weights(n, 0.0) {}
};

inline LocalDesign local_design(const std::vector<double>& xs, double x, std::size_t degree,
                                const KernelSpec& spec) {
  if (xs.empty()) throw std::invalid_argument("local_design: no observations");
  LocalDesign out(x, degree, xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double d = xs[i] - x;
    double term = 1.0;
    out.design.at(i, 0) = 1.0;
    for (std::size_t j = 1; j <= degree; ++j) {
      term *= d / static_cast<double>(j);
      out.design.at(i, j) = term;
    }
    out.weights[i] = kernel_weight(spec, std::abs(d));
  }
  return out;
}

struct LocalFit {
  std::vector<double> a_hat;  // local Taylor coefficients at the query point
  double r_hat = 0.0;         // a_hat[0]
  std::vector<double> ell;    // smoother vector: r_hat = sum ell_i * y_i
  exact::PivotStats backend_stats;
};

namespace detail {

struct WeightedSystem {
  RealMatrix gram;          // X^T W X, (p+1) x (p+1)
  std::vector<double> rhs;  // X^T W Y
};

// Weights are scaled by their maximum before quantization; the weighted
// normal equations are invariant under that scaling, and it keeps the
// largest Gram entries near unit size so the fixed quantization step stays
// negligible.
inline WeightedSystem weighted_system(const LocalDesign& ld, const std::vector<double>& ys) {
  const std::size_t n = ld.weights.size(), q = ld.degree + 1;
  double wmax = 0.0;
  for (double w : ld.weights) wmax = std::max(wmax, w);
  if (!(wmax > 0.0))
    throw EmptyNeighborhoodError("local_fit: all kernel weights are zero at the query point");

  WeightedSystem sys{RealMatrix(q, q), std::vector<double>(q, 0.0)};
  for (std::size_t i = 0; i < n; ++i) {
    const double w = ld.weights[i] / wmax;
    if (w == 0.0) continue;
    for (std::size_t a = 0; a < q; ++a) {
      const double wa = w * ld.design.at(i, a);
      sys.rhs[a] += wa * ys[i];
      for (std::size_t b = a; b < q; ++b) sys.gram.at(a, b) += wa * ld.design.at(i, b);
    }
  }
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < a; ++b) sys.gram.at(a, b) = sys.gram.at(b, a);
  return sys;
}

}  // namespace detail

// Local polynomial fit at one query point: solves the weighted normal
// equations (X^T W X) a = X^T W Y exactly after quantization, with the
// pseudoinverse giving the minimum-norm coefficients when the local Gram is
// singular.  The smoother vector is ell^T = e_0^T (X^T W X)+ X^T W.
inline LocalFit local_fit(const std::vector<double>& xs, const std::vector<double>& ys, double x,
                          std::size_t degree, const KernelSpec& spec,
                          exact::PivotBackend backend = exact::PivotBackend::Classical,
                          std::uint64_t seed = 0) {
  if (xs.size() != ys.size()) throw std::invalid_argument("local_fit: xs and ys differ in length");
  const LocalDesign ld = local_design(xs, x, degree, spec);
  const auto sys = detail::weighted_system(ld, ys);
  const std::size_t q = degree + 1;

  const exact::Matrix gram = rationalize(sys.gram);
  const auto rhs = rationalize(sys.rhs);

  LocalFit fit;
  const auto sol = exact::solve(gram, rhs, backend, seed);
  fit.backend_stats = sol.backend_stats;

  exact::Matrix pinv(q, q);
  if (sol.nullspace_basis.empty()) {
    fit.a_hat = to_real(*sol.particular);
    pinv = exact::inverse(gram, backend, derive_seed(seed, q), &fit.backend_stats);
  } else {
    pinv = exact::pseudoinverse(gram, backend, derive_seed(seed, q), &fit.backend_stats);
    fit.a_hat.assign(q, 0.0);
    for (std::size_t a = 0; a < q; ++a) {
      exact::Rational acc;
      for (std::size_t b = 0; b < q; ++b) acc += pinv.at(a, b) * rhs[b];
      fit.a_hat[a] = acc.to_double();
    }
  }
  fit.r_hat = fit.a_hat[0];

  // ell_i = w_i * sum_j pinv(0, j) * design(i, j), with the same max-scaled
  // weights; compactly supported kernels therefore give exact zeros outside
  // the bandwidth.
  std::vector<double> row0(q);
  for (std::size_t j = 0; j < q; ++j) row0[j] = pinv.at(0, j).to_double();
  double wmax = 0.0;
  for (double w : ld.weights) wmax = std::max(wmax, w);
  fit.ell.resize(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double w = ld.weights[i] / wmax;
    if (w == 0.0) {
      fit.ell[i] = 0.0;
      continue;
    }
    double s = 0.0;
    for (std::size_t j = 0; j < q; ++j) s += row0[j] * ld.design.at(i, j);
    fit.ell[i] = w * s;
  }
  return fit;
}

// Kernel-weighted mean of the responses; the degree-0 local fit.
inline double nadaraya_watson(const std::vector<double>& xs, const std::vector<double>& ys,
                              double x, const KernelSpec& spec) {
  if (xs.size() != ys.size())
    throw std::invalid_argument("nadaraya_watson: xs and ys differ in length");
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double w = kernel_weight(spec, std::abs(xs[i] - x));
    num += w * ys[i];
    den += w;
  }
  if (!(den > 0.0))
    throw EmptyNeighborhoodError("nadaraya_watson: total kernel weight is zero at the query point");
  return num / den;
}

struct LocalBandResult {
  ConfidenceBand band;
  double sigma2_hat = 0.0;
  double effective_dof = 0.0;  // tr of the smoother matrix at the data points
  std::size_t nu = 1;          // rounded effective dof used for the F quantile
  exact::PivotStats backend_stats;
};

// Confidence band for the local fit over a grid of query points.  The
// smoother matrix S stacks ell(x_i) at the observation points; sigma2 uses
// the residual sum of squares over n - tr(S), and the band constant is
// c = sqrt(nu * F_quantile(alpha; nu, n - nu)) with nu = round(tr S),
// clamped to at least 1.
inline LocalBandResult local_band(const std::vector<double>& xs, const std::vector<double>& ys,
                                  const std::vector<double>& grid, std::size_t degree,
                                  const KernelSpec& spec, double alpha,
                                  exact::PivotBackend backend = exact::PivotBackend::Classical,
                                  std::uint64_t seed = 0) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("local_band: alpha must be in (0, 1)");
  if (xs.size() != ys.size()) throw std::invalid_argument("local_band: xs and ys differ in length");
  const std::size_t n = xs.size();

  LocalBandResult out;
  double trace = 0.0, ssr = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto fit = local_fit(xs, ys, xs[i], degree, spec, backend, derive_seed(seed, i));
    out.backend_stats += fit.backend_stats;
    trace += fit.ell[i];
    const double r = ys[i] - fit.r_hat;
    ssr += r * r;
  }
  if (!(static_cast<double>(n) > trace))
    throw DegreesOfFreedomError("local_band: requires n > tr(S)");
  out.effective_dof = trace;
  out.sigma2_hat = ssr / (static_cast<double>(n) - trace);

  const long nu_l = std::lround(trace);
  out.nu = nu_l < 1 ? 1 : static_cast<std::size_t>(nu_l);
  if (n <= out.nu) throw DegreesOfFreedomError("local_band: requires n > rounded effective dof");
  const double c = std::sqrt(static_cast<double>(out.nu) *
                             stats::f_quantile(alpha, static_cast<int>(out.nu),
                                               static_cast<int>(n - out.nu)));
  const double sigma = std::sqrt(out.sigma2_hat);

  ConfidenceBand& band = out.band;
  band.alpha = alpha;
  band.c = c;
  band.grid.reserve(grid.size());
  band.lower.reserve(grid.size());
  band.center.reserve(grid.size());
  band.upper.reserve(grid.size());
  for (std::size_t g = 0; g < grid.size(); ++g) {
    const auto fit = local_fit(xs, ys, grid[g], degree, spec, backend, derive_seed(seed, n + g));
    out.backend_stats += fit.backend_stats;
    double norm2 = 0.0;
    for (double e : fit.ell) norm2 += e * e;
    const double hw = c * sigma * std::sqrt(norm2);
    band.grid.push_back({grid[g]});
    band.lower.push_back(fit.r_hat - hw);
    band.center.push_back(fit.r_hat);
    band.upper.push_back(fit.r_hat + hw);
  }
  return out;
}

}  // namespace qnr::regress
