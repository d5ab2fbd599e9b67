#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace qnr {

// Small dense double matrix, row-major.  Just the handful of operations the
// regression layer needs; the exact linear algebra lives in qnr::exact.
class RealMatrix {
public:
  RealMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols, 0.0) {
    if (rows == 0 || cols == 0)
      throw std::invalid_argument("RealMatrix: dimensions must be positive");
  }

  RealMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
      : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (rows == 0 || cols == 0)
      throw std::invalid_argument("RealMatrix: dimensions must be positive");
    if (e_.size() != rows * cols) throw std::invalid_argument("RealMatrix: entry count mismatch");
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
  double& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }

  std::vector<double> row(std::size_t r) const {
    return std::vector<double>(e_.begin() + r * cols_, e_.begin() + (r + 1) * cols_);
  }

  RealMatrix transpose() const {
    RealMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
  }

  friend RealMatrix operator*(const RealMatrix& a, const RealMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("RealMatrix: incompatible shapes");
    RealMatrix p(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const double v = a.at(r, k);
        if (v == 0.0) continue;
        for (std::size_t c = 0; c < b.cols_; ++c) p.at(r, c) += v * b.at(k, c);
      }
    return p;
  }

  std::vector<double> mul_vec(const std::vector<double>& x) const {
    if (x.size() != cols_) throw std::invalid_argument("RealMatrix: vector length mismatch");
    std::vector<double> y(rows_, 0.0);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) y[r] += at(r, c) * x[c];
    return y;
  }

  double trace() const {
    const std::size_t n = rows_ < cols_ ? rows_ : cols_;
    double t = 0.0;
    for (std::size_t i = 0; i < n; ++i) t += at(i, i);
    return t;
  }

private:
  std::size_t rows_, cols_;
  std::vector<double> e_;
};

}  // namespace qnr
