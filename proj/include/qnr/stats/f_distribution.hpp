#pragma once

#include <cmath>
#include <stdexcept>

namespace qnr::stats {

// Continued fraction for the regularized incomplete beta function, evaluated
// with the modified Lentz algorithm.  Converges quickly for
// x < (a+1)/(a+b+2); the caller applies the symmetry for larger x.
inline double ibeta_continued_fraction(double a, double b, double x) {
  constexpr double tiny = 1e-300;
  constexpr double eps = 1e-15;
  constexpr int max_terms = 300;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < tiny) d = tiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= max_terms; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < eps) break;
  }
  return h;
}

// Regularized incomplete beta I_x(a, b).
inline double regularized_incomplete_beta(double a, double b, double x) {
  if (a <= 0.0 || b <= 0.0)
    throw std::invalid_argument("regularized_incomplete_beta: a, b must be positive");
  if (x < 0.0 || x > 1.0)
    throw std::invalid_argument("regularized_incomplete_beta: x must be in [0, 1]");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;

  const double log_prefactor = a * std::log(x) + b * std::log1p(-x) -
                               (std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
  if (x < (a + 1.0) / (a + b + 2.0))
    return std::exp(log_prefactor) * ibeta_continued_fraction(a, b, x) / a;
  return 1.0 - std::exp(log_prefactor) * ibeta_continued_fraction(b, a, 1.0 - x) / b;
}

// CDF of the F(d1, d2) distribution at x.
inline double f_cdf(double x, int d1, int d2) {
  if (d1 < 1 || d2 < 1) throw std::invalid_argument("f_cdf: degrees of freedom must be positive");
  if (x <= 0.0) return 0.0;
  const double a = 0.5 * d1;
  const double b = 0.5 * d2;
  const double t = d1 * x / (d1 * x + d2);
  return regularized_incomplete_beta(a, b, t);
}

// Upper-tail quantile: the q with P(F(d1, d2) > q) = alpha, located by
// bisection on f_cdf to absolute tolerance 1e-10.
inline double f_quantile(double alpha, int d1, int d2) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("f_quantile: alpha must be in (0, 1)");
  if (d1 < 1 || d2 < 1)
    throw std::invalid_argument("f_quantile: degrees of freedom must be positive");

  const double target = 1.0 - alpha;
  double lo = 0.0;
  double hi = 1.0;
  while (f_cdf(hi, d1, d2) < target) {
    hi *= 2.0;
    if (hi > 1e300) throw std::runtime_error("f_quantile: bracket expansion failed");
  }
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    if (f_cdf(mid, d1, d2) < target)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace qnr::stats
