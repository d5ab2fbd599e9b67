#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "qnr/exact/rational.hpp"

namespace qnr::exact {

// Dense rational matrix, row-major.  Values are immutable in all public
// algorithms; row operations happen on private copies.
class Matrix {
public:
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("Matrix: dimensions must be positive");
  }

  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
      : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("Matrix: dimensions must be positive");
    if (e_.size() != rows * cols) throw std::invalid_argument("Matrix: entry count mismatch");
  }

  static Matrix from_rows(std::initializer_list<std::initializer_list<Rational>> rows) {
    const std::size_t r = rows.size();
    if (r == 0) throw std::invalid_argument("Matrix: no rows");
    const std::size_t c = rows.begin()->size();
    std::vector<Rational> e;
    e.reserve(r * c);
    for (const auto& row : rows) {
      if (row.size() != c) throw std::invalid_argument("Matrix: ragged rows");
      for (const auto& v : row) e.push_back(v);
    }
    return Matrix(r, c, std::move(e));
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Rational& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
  Rational& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: incompatible product shapes");
    Matrix p(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a.at(r, k).is_zero()) continue;
        for (std::size_t c = 0; c < b.cols_; ++c)
          p.at(r, c) += a.at(r, k) * b.at(k, c);
      }
    return p;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("Matrix: incompatible difference shapes");
    Matrix d(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.e_.size(); ++i) d.e_[i] = a.e_[i] - b.e_[i];
    return d;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  bool is_zero() const {
    for (const auto& v : e_)
      if (!v.is_zero()) return false;
    return true;
  }

  // [this | right]
  Matrix augment(const Matrix& right) const {
    if (rows_ != right.rows_) throw std::invalid_argument("Matrix: augment row mismatch");
    Matrix m(rows_, cols_ + right.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) m.at(r, c) = at(r, c);
      for (std::size_t c = 0; c < right.cols_; ++c) m.at(r, cols_ + c) = right.at(r, c);
    }
    return m;
  }

  Matrix columns(const std::vector<std::size_t>& which) const {
    if (which.empty()) throw std::invalid_argument("Matrix: empty column selection");
    Matrix m(rows_, which.size());
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t j = 0; j < which.size(); ++j) m.at(r, j) = at(r, which[j]);
    return m;
  }

  Matrix top_rows(std::size_t count) const {
    if (count == 0 || count > rows_) throw std::invalid_argument("Matrix: bad row count");
    Matrix m(count, cols_, std::vector<Rational>(e_.begin(), e_.begin() + count * cols_));
    return m;
  }

  static Matrix column_vector(const std::vector<Rational>& v) {
    Matrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m.at(i, 0) = v[i];
    return m;
  }

private:
  std::size_t rows_, cols_;
  std::vector<Rational> e_;
};

}  // namespace qnr::exact
