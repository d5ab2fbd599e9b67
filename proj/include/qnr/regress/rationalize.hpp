#pragma once

#include <vector>

#include "qnr/exact/matrix.hpp"
#include "qnr/real_matrix.hpp"

namespace qnr::regress {

// The float->rational boundary of the regression modules.  Normal-equation
// inputs are snapped to the nearest rational with this fixed denominator
// before entering exact elimination; every statistic downstream is computed
// in floating point from the exact solve's output.
inline constexpr unsigned kQuantizationDigits = 12;  // denominator 10^12

inline exact::Matrix rationalize(const RealMatrix& m) {
  exact::Matrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      out.at(r, c) = exact::Rational::from_decimal_scaled(m.at(r, c), kQuantizationDigits);
  return out;
}

inline std::vector<exact::Rational> rationalize(const std::vector<double>& v) {
  std::vector<exact::Rational> out;
  out.reserve(v.size());
  for (double x : v) out.push_back(exact::Rational::from_decimal_scaled(x, kQuantizationDigits));
  return out;
}

inline RealMatrix to_real(const exact::Matrix& m) {
  RealMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out.at(r, c) = m.at(r, c).to_double();
  return out;
}

inline std::vector<double> to_real(const std::vector<exact::Rational>& v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.to_double());
  return out;
}

}  // namespace qnr::regress
