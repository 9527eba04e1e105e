// Copyright 2026 The sepbasis Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sepbasis/matrix.hpp"

#include <string>

namespace sepbasis {

RatMatrix::RatMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) fail(ErrorKind::Domain, "negative matrix dimension");
  a_.resize(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
}

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

Rational& RatMatrix::at(int i, int j) {
  return a_[static_cast<std::size_t>(i) * cols_ + j];
}

const Rational& RatMatrix::at(int i, int j) const {
  return a_[static_cast<std::size_t>(i) * cols_ + j];
}

RatMatrix RatMatrix::operator-() const {
  RatMatrix r = *this;
  for (auto& x : r.a_) x = -x;
  return r;
}

static void check_same_shape(const RatMatrix& a, const RatMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    fail(ErrorKind::Domain, std::string("matrix shape mismatch in ") + op);
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  check_same_shape(a, b, "addition");
  RatMatrix r = a;
  for (int i = 0; i < r.rows_; ++i)
    for (int j = 0; j < r.cols_; ++j) r.at(i, j) += b.at(i, j);
  return r;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
  check_same_shape(a, b, "subtraction");
  RatMatrix r = a;
  for (int i = 0; i < r.rows_; ++i)
    for (int j = 0; j < r.cols_; ++j) r.at(i, j) -= b.at(i, j);
  return r;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) fail(ErrorKind::Domain, "matrix shape mismatch in product");
  RatMatrix r(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Rational& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols(); ++j) r.at(i, j) += aik * b.at(k, j);
    }
  return r;
}

RatMatrix RatMatrix::scaled(const Rational& s) const {
  RatMatrix r = *this;
  for (auto& x : r.a_) x *= s;
  return r;
}

bool operator==(const RatMatrix& a, const RatMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

std::vector<Rational> RatMatrix::apply(const std::vector<Rational>& v) const {
  if (static_cast<int>(v.size()) != cols_)
    fail(ErrorKind::Domain, "vector length does not match matrix columns");
  std::vector<Rational> r(static_cast<std::size_t>(rows_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero()) r[static_cast<std::size_t>(i)] += at(i, j) * v[static_cast<std::size_t>(j)];
  return r;
}

bool RatMatrix::is_upper_triangular() const {
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < i && j < cols_; ++j)
      if (!at(i, j).is_zero()) return false;
  return true;
}

std::vector<Rational> RatMatrix::diagonal() const {
  const int n = rows_ < cols_ ? rows_ : cols_;
  std::vector<Rational> d(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) d[static_cast<std::size_t>(i)] = at(i, i);
  return d;
}

RatMatrix RatMatrix::leading_block(int n) const {
  if (n > rows_ || n > cols_) fail(ErrorKind::Domain, "leading block larger than matrix");
  RatMatrix r(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.at(i, j) = at(i, j);
  return r;
}

// Fraction-free Gauss-Jordan step: every update is
//   w(i,j) <- (w(i,j)*pivot - w(i,k)*w(k,j)) / prev
// with prev the previous pivot, so divisions are exact at each stage.
RatMatrix RatMatrix::inverse() const {
  if (rows_ != cols_) fail(ErrorKind::Domain, "inverse of a non-square matrix");
  const int n = rows_;
  RatMatrix w(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) w.at(i, j) = at(i, j);
    w.at(i, n + i) = Rational(1);
  }
  Rational prev(1);
  std::string trace;
  for (int k = 0; k < n; ++k) {
    int r = k;
    while (r < n && w.at(r, k).is_zero()) ++r;
    if (r == n)
      fail(ErrorKind::Singular,
           "singular matrix: no pivot in column " + std::to_string(k) +
               " (pivots so far:" + (trace.empty() ? " none" : trace) + ")");
    if (r != k)
      for (int j = 0; j < 2 * n; ++j) std::swap(w.at(r, j), w.at(k, j));
    const Rational pivot = w.at(k, k);
    trace += " " + pivot.str();
    for (int i = 0; i < n; ++i) {
      if (i == k) continue;
      const Rational wik = w.at(i, k);
      for (int j = 0; j < 2 * n; ++j) {
        if (j == k) continue;
        w.at(i, j) = (w.at(i, j) * pivot - wik * w.at(k, j)) / prev;
      }
      w.at(i, k) = Rational(0);
    }
    prev = pivot;
  }
  RatMatrix inv(n, n);
  for (int i = 0; i < n; ++i) {
    const Rational d = w.at(i, i);
    for (int j = 0; j < n; ++j) inv.at(i, j) = w.at(i, n + j) / d;
  }
  return inv;
}

int RatMatrix::rank() const {
  RatMatrix w = *this;
  int rank = 0;
  for (int col = 0; col < cols_ && rank < rows_; ++col) {
    int r = rank;
    while (r < rows_ && w.at(r, col).is_zero()) ++r;
    if (r == rows_) continue;
    if (r != rank)
      for (int j = 0; j < cols_; ++j) std::swap(w.at(r, j), w.at(rank, j));
    const Rational pivot = w.at(rank, col);
    for (int i = rank + 1; i < rows_; ++i) {
      const Rational f = w.at(i, col) / pivot;
      if (f.is_zero()) continue;
      for (int j = col; j < cols_; ++j) w.at(i, j) -= f * w.at(rank, j);
    }
    ++rank;
  }
  return rank;
}

std::optional<std::vector<Rational>> solve_exact(const RatMatrix& A,
                                                 const std::vector<Rational>& b) {
  if (static_cast<int>(b.size()) != A.rows())
    fail(ErrorKind::Domain, "right-hand side length does not match matrix rows");
  const int m = A.rows(), n = A.cols();
  RatMatrix w(m, n + 1);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) w.at(i, j) = A.at(i, j);
    w.at(i, n) = b[static_cast<std::size_t>(i)];
  }
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < n && row < m; ++col) {
    int r = row;
    while (r < m && w.at(r, col).is_zero()) ++r;
    if (r == m) continue;
    if (r != row)
      for (int j = 0; j <= n; ++j) std::swap(w.at(r, j), w.at(row, j));
    const Rational pivot = w.at(row, col);
    for (int i = 0; i < m; ++i) {
      if (i == row) continue;
      const Rational f = w.at(i, col) / pivot;
      if (f.is_zero()) continue;
      for (int j = col; j <= n; ++j) w.at(i, j) -= f * w.at(row, j);
    }
    pivot_col.push_back(col);
    ++row;
  }
  if (static_cast<int>(pivot_col.size()) < n)
    fail(ErrorKind::Singular, "dependent columns: rank " +
                                  std::to_string(pivot_col.size()) + " of " + std::to_string(n));
  for (int i = row; i < m; ++i)
    if (!w.at(i, n).is_zero()) return std::nullopt;  // inconsistent
  std::vector<Rational> x(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    x[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(i)])] =
        w.at(i, n) / w.at(i, pivot_col[static_cast<std::size_t>(i)]);
  return x;
}

}  // namespace sepbasis
